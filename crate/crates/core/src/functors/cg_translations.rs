//! Translations between filter lattices and CG-spaces.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::relation::Relation;
use crate::spaces::stable::union_closure;
use crate::spaces::{CgMorphism, CgSpace, FamilyOrder, FiltMorphism, StableFamily};
use crate::subset::Subset;

/// The meet-irreducible elements `X_m` of a filter lattice, in index
/// order.
pub fn meet_irreducible_points(x: &Lattice) -> Vec<usize> {
    x.meet_irreducibles().iter().collect()
}

/// `(X_m, 𝒦_X)` with `𝒦_X = {−↑k ∩ X_m : k ∈ X}`: on a finite lattice the
/// compact open filters are the principal ones.
pub fn cg_from_filt(x: &Lattice) -> CgSpace {
    let points = meet_irreducible_points(x);
    let labels = points.iter().map(|&p| x.label(p).to_string()).collect();
    let subbasis = (0..x.len())
        .map(|k| Subset::from_predicate(points.len(), |i| !x.leq(k, points[i])))
        .collect();
    CgSpace::new(labels, subbasis).expect("subbasis lives on X_m")
}

/// `S_f ⊆ X_m × X′_m` with `x S_f y` iff `f(x) ≤ y`.
pub fn cg_from_filt_mor(source: &Lattice, target: &Lattice, f: &FiltMorphism) -> CgMorphism {
    let (p1, p2) = (
        meet_irreducible_points(source),
        meet_irreducible_points(target),
    );
    CgMorphism {
        relation: Relation::from_fn(p1.len(), p2.len(), |i, j| target.leq(f.map[p1[i]], p2[j])),
    }
}

/// The lattice of unions of subbasic sets, ordered by inclusion (joins are
/// unions; meets are the largest union inside the intersection).
pub fn filt_from_cg(c: &CgSpace) -> Result<StableFamily> {
    StableFamily::new(
        "H",
        c.labels(),
        union_closure(c.len(), c.subbasis()),
        FamilyOrder::Inclusion,
    )
}

/// `f_S(H) = ⋃{V ∈ 𝒦₂ : S⁻¹[V] ⊆ H}`.
pub fn filt_from_cg_mor(
    source: &CgSpace,
    target: &CgSpace,
    m: &CgMorphism,
) -> Result<FiltMorphism> {
    let (h1, h2) = (filt_from_cg(source)?, filt_from_cg(target)?);
    let map = h1
        .members()
        .iter()
        .map(|h| {
            let mut out = Subset::empty(target.len());
            for v in target
                .subbasis()
                .iter()
                .filter(|v| m.relation.preimage(v).is_subset(h))
            {
                out.union_with(v);
            }
            h2.position(&out).ok_or_else(|| {
                Error::NotValidated(format!(
                    "f_S image {} is not a union of subbasic sets",
                    out.display_with(target.labels())
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltMorphism { map })
}
