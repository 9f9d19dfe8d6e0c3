//! The isomorphisms `γ`, `δ`, `μ`, `ξ` between the reconstruction lattices
//! of consecutive functors, and the triangles they make commute.

use std::fmt;

use crate::error::{Error, Result};
use crate::functors::chain::{gvg_embeddings, hg_embeddings};
use crate::iso::is_order_iso;
use crate::lattice::Lattice;
use crate::spaces::{DualMorphism, DualSpace, StableFamily};
use crate::subset::Subset;

use super::cycle::{next_morphism, next_space};
use super::stable_map_between;

/// Which witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `CLF(X) → ℒ𝒢`, `U ↦ U ∩ X_p`.
    Gamma,
    /// `ℒ𝒢 → ℒℋ`, `U ↦ U ∩ X₀`.
    Delta,
    /// `ℒℋ → ℒ𝒰`, `A ↦ (A × Y) ∩ Z`.
    Mu,
    /// `ℒ𝒰 → CLF(LC 𝒰)`, `C ↦ ↑C`.
    Xi,
    /// Any lattice isomorphism found by search.
    LatticeIso,
}

impl WitnessKind {
    pub const TRIANGLES: [WitnessKind; 4] = [
        WitnessKind::Gamma,
        WitnessKind::Delta,
        WitnessKind::Mu,
        WitnessKind::Xi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Gamma => "gamma",
            WitnessKind::Delta => "delta",
            WitnessKind::Mu => "mu",
            WitnessKind::Xi => "xi",
            WitnessKind::LatticeIso => "lattice-iso",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A verified lattice isomorphism `source → target` given by its table.
#[derive(Debug, Clone)]
pub struct IsoWitness {
    pub kind: WitnessKind,
    pub source: Lattice,
    pub target: Lattice,
    pub table: Vec<usize>,
}

/// The witness of `kind` on `space`, which must lie in the witness's
/// domain category (DH for `γ`, GvG for `δ`, Hg for `μ`, Urq for `ξ`).
pub fn iso_witness(kind: WitnessKind, space: &DualSpace) -> Result<IsoWitness> {
    let next = next_space(space)?;
    let (from, to) = (space.stable_family()?, next.stable_family()?);
    let table = witness_table(kind, space, &from, &to)?;
    let (source, target) = (from.into_lattice(), to.into_lattice());
    if !is_order_iso(&source, &target, &table) {
        return Err(Error::WitnessFailed(format!(
            "{kind} on {} is not an order isomorphism",
            source.name()
        )));
    }
    Ok(IsoWitness {
        kind,
        source,
        target,
        table,
    })
}

/// The witness table from `from` (stable sets of `space`) to `to` (stable
/// sets of the next space on the cycle).
fn witness_table(
    kind: WitnessKind,
    space: &DualSpace,
    from: &StableFamily,
    to: &StableFamily,
) -> Result<Vec<usize>> {
    let image: Box<dyn Fn(&Subset) -> Subset> = match (kind, space) {
        (WitnessKind::Gamma, DualSpace::Dh(d)) => {
            let (xp, _) = gvg_embeddings(d);
            Box::new(move |u: &Subset| u.restrict(&xp))
        }
        (WitnessKind::Delta, DualSpace::Gvg(g)) => {
            let (x0, _) = hg_embeddings(g);
            Box::new(move |u: &Subset| u.restrict(&x0))
        }
        (WitnessKind::Mu, DualSpace::Hg(h)) => {
            let z = h.maximal_pairs();
            Box::new(move |a: &Subset| Subset::from_predicate(z.len(), |i| a.contains(z[i].0)))
        }
        (WitnessKind::Xi, DualSpace::Urq(u)) => {
            let lc = u.left_closed()?;
            let n = lc.len();
            Box::new(move |c: &Subset| match lc.position(c) {
                Some(i) => lc.lattice().principal_filter(i),
                None => Subset::empty(n),
            })
        }
        _ => {
            return Err(Error::WitnessFailed(format!(
                "{kind} is not defined on {} spaces",
                space.category()
            )))
        }
    };
    from.members()
        .iter()
        .map(|s| {
            let t = image(s);
            to.position(&t).ok_or_else(|| {
                Error::WitnessFailed(format!(
                    "{kind} sends a stable set outside the target family"
                ))
            })
        })
        .collect()
}

/// Check the triangle of `kind` for a morphism `m: source → target`:
/// `L(F m) ∘ w_target = w_source ∘ L(m)` as maps `L(target) → L(F source)`,
/// where `F` is the functor leaving the category and `w` the witness.
/// `Ok(None)` when it commutes, otherwise a description of the first
/// stable set where it fails.
pub fn check_triangle(
    kind: WitnessKind,
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Result<Option<String>> {
    let (next_source, next_target) = (next_space(source)?, next_space(target)?);
    let next_m = next_morphism(m, source, target)?;
    let (fam_s, fam_t) = (source.stable_family()?, target.stable_family()?);
    let (fam_ns, fam_nt) = (next_source.stable_family()?, next_target.stable_family()?);
    let w_source = witness_table(kind, source, &fam_s, &fam_ns)?;
    let w_target = witness_table(kind, target, &fam_t, &fam_nt)?;
    let l_m = stable_map_between(m, &fam_t, &fam_s)?;
    let l_next = stable_map_between(&next_m, &fam_nt, &fam_ns)?;
    Ok((0..fam_t.len())
        .find(|&u| l_next[w_target[u]] != w_source[l_m[u]])
        .map(|u| {
            format!(
                "{kind} triangle fails at stable set {} of the target",
                fam_t.lattice().label(u)
            )
        }))
}
