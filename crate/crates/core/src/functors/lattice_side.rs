//! Functors out of (and back into) finite lattices: the DH-space and
//! CG-space of a lattice, the filter-lattice dual of a homomorphism, and the
//! finite form of the functor sending a coherent lattice to a DH-space.

use crate::error::{Error, Result};
use crate::hom::{AdjointSide, LatticeHom};
use crate::lattice::Lattice;
use crate::relation::Relation;
use crate::spaces::{CgMorphism, CgSpace, DhMorphism, DhSpace, FiltMorphism};
use crate::subset::Subset;

/// Lower adjoint `ℓ(b) = ⋀{a : b ≤ α(a)}` of a homomorphism, which exists
/// because homomorphisms preserve all finite meets.
fn lower_adjoint(alpha: &LatticeHom) -> Vec<usize> {
    alpha
        .as_monotone()
        .adjoint(AdjointSide::Left)
        .expect("a bounded lattice homomorphism preserves all finite meets")
        .map()
        .to_vec()
}

/// Upper adjoint `r(b) = ⋁{a : α(a) ≤ b}`.
fn upper_adjoint(alpha: &LatticeHom) -> Vec<usize> {
    alpha
        .as_monotone()
        .adjoint(AdjointSide::Right)
        .expect("a bounded lattice homomorphism preserves all finite joins")
        .map()
        .to_vec()
}

/// `(Filt(A), R, Idl(A))` with `↑x R ↓y` iff `↑x ∩ ↓y = ∅` iff `x ≰ y`.
///
/// Element `i` of either side is the principal filter (ideal) generated by
/// element `i` of `A`.
pub fn dh_of(a: &Lattice) -> DhSpace {
    let n = a.len();
    let relation = Relation::from_fn(n, n, |x, y| !a.leq(x, y));
    DhSpace::new(a.filt(), a.idl(), relation).expect("carriers have the lattice's size")
}

/// The DH-morphism `(α⁻¹|Filt, α⁻¹|Idl): DH(B) → DH(A)` of `α: A → B`.
///
/// `α⁻¹(↑b) = ↑ℓ(b)` and `α⁻¹(↓b) = ↓r(b)` for the lower and upper
/// adjoints of `α`, so both maps are stored by generator.
pub fn dh_of_hom(alpha: &LatticeHom) -> DhMorphism {
    DhMorphism {
        x_map: lower_adjoint(alpha),
        y_map: upper_adjoint(alpha),
    }
}

/// The filter-lattice morphism `α⁻¹: Filt(B) → Filt(A)` of `α: A → B`.
pub fn filt_of_hom(alpha: &LatticeHom) -> FiltMorphism {
    FiltMorphism {
        map: lower_adjoint(alpha),
    }
}

/// The CG-space of `A`: the meet-irreducible filters `↑j` (`j`
/// join-irreducible) with subbasis `{−𝔰(a) : a ∈ A}`, where
/// `𝔰(a) = {x : a ∈ x}`.
pub fn cg_of(a: &Lattice) -> CgSpace {
    let points: Vec<usize> = a.join_irreducibles().iter().collect();
    let labels = points.iter().map(|&j| format!("↑{}", a.label(j))).collect();
    let subbasis = (0..a.len())
        .map(|e| Subset::from_predicate(points.len(), |i| !a.leq(points[i], e)))
        .collect();
    CgSpace::new(labels, subbasis).expect("subbasis lives on the point set")
}

/// The CG-morphism `S_α ⊆ X_B × X_A` of `α: A → B`: `y S_α x` iff
/// `α⁻¹(y) ⊆ x`.
pub fn cg_of_hom(alpha: &LatticeHom) -> CgMorphism {
    let (a, b) = (alpha.source(), alpha.target());
    let xa: Vec<usize> = a.join_irreducibles().iter().collect();
    let xb: Vec<usize> = b.join_irreducibles().iter().collect();
    let relation = Relation::from_fn(xb.len(), xa.len(), |q, p| {
        // α⁻¹(↑j) ⊆ ↑i: every a with j ≤ α(a) lies above i.
        (0..a.len()).all(|e| !b.leq(xb[q], alpha.apply(e)) || a.leq(xa[p], e))
    });
    CgMorphism { relation }
}

/// `(X, R, Filt(X))` with `x R ↑k` iff `x ∉ ↑k`: on finite carriers the open
/// filters of `X` are all its filters.
pub fn e_functor(x: &Lattice) -> DhSpace {
    let n = x.len();
    let relation = Relation::from_fn(n, n, |p, k| !x.leq(k, p));
    DhSpace::new(x.clone(), x.filt(), relation).expect("carriers have the lattice's size")
}

/// `(f, r): E(X) → E(X′)` with `r(↑k) = ⋃{↑k′ : f⁻¹(↑k′) ⊆ ↑k}`.
pub fn e_functor_mor(source: &Lattice, target: &Lattice, f: &FiltMorphism) -> Result<DhMorphism> {
    let y_map = (0..source.len())
        .map(|k| {
            let mut union = Subset::empty(target.len());
            for k2 in 0..target.len() {
                let preimage_inside =
                    (0..source.len()).all(|p| !target.leq(k2, f.map[p]) || source.leq(k, p));
                if preimage_inside {
                    union.union_with(&target.principal_filter(k2));
                }
            }
            target.filter_generator(&union).ok_or_else(|| {
                Error::NotValidated(format!(
                    "the filter image of ↑{} under E is not a filter of {}",
                    source.label(k),
                    target.name()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DhMorphism {
        x_map: f.map.clone(),
        y_map,
    })
}

/// `ν(y) = −R⁻¹[y]` as a generator of `X`, for every `y ∈ Y`.
pub fn nu_map(d: &DhSpace) -> Result<Vec<usize>> {
    let r = d.relation();
    (0..d.y().len())
        .map(|q| {
            d.x()
                .filter_generator(&r.col(q).complement())
                .ok_or_else(|| {
                    Error::NotValidated(format!("−R⁻¹[{}] is not a filter", d.y().label(q)))
                })
        })
        .collect()
}
