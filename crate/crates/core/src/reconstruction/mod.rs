//! Reconstructing lattices and homomorphisms from dual spaces, the
//! isomorphism witnesses between reconstruction lattices, and the natural
//! isomorphisms of the diagram of equivalences.

pub mod cycle;
pub mod natural;
pub mod witness;

use std::sync::Arc;

pub use natural::{
    check_naturality, check_naturality_with, nat_component, NaturalComponent, NaturalKind,
};
pub use witness::{check_triangle, iso_witness, IsoWitness, WitnessKind};

use crate::error::{Error, Result};
use crate::functors::dual;
use crate::hom::LatticeHom;
use crate::iso::lattice_iso;
use crate::lattice::Lattice;
use crate::spaces::{self, Category, DualMorphism, DualSpace, StableFamily};
use crate::subset::Subset;

/// The lattice of stable sets of a validated space: `KOF` for filter
/// lattices, `ℒ𝒞` for CG-spaces, `CLF` for DH-spaces, and `ℒ𝒢`, `ℒℋ`, `ℒ𝒰`,
/// `ℒ𝒫` for the relational spaces.
pub fn lattice_from(space: &DualSpace) -> Result<Lattice> {
    space.validate().into_result()?;
    Ok(space.stable_family()?.into_lattice())
}

/// The table of the stable-set map `L(target) → L(source)` induced by a
/// morphism `source → target`, without validating anything.
pub fn stable_map(m: &DualMorphism, source: &DualSpace, target: &DualSpace) -> Result<Vec<usize>> {
    let (from, to) = (target.stable_family()?, source.stable_family()?);
    stable_map_between(m, &from, &to)
}

/// As [`stable_map`], with both families precomputed: `from` belongs to
/// the morphism's target and `to` to its source.
pub(crate) fn stable_map_between(
    m: &DualMorphism,
    from: &StableFamily,
    to: &StableFamily,
) -> Result<Vec<usize>> {
    let pull =
        |map: &[usize], s: &Subset| Subset::from_predicate(map.len(), |x| s.contains(map[x]));
    from.members()
        .iter()
        .map(|b| {
            let image = match m {
                DualMorphism::Filt(f) => pull(&f.map, b),
                DualMorphism::Dh(f) => pull(&f.x_map, b),
                DualMorphism::Cg(s) => s.relation.boxed(b),
                DualMorphism::Gvg(p)
                | DualMorphism::Hg(p)
                | DualMorphism::Urq(p)
                | DualMorphism::Plo(p) => p.left.boxed(b),
            };
            to.position(&image).ok_or_else(|| {
                Error::NotValidated(format!(
                    "{} image of a stable set is not stable",
                    m.category()
                ))
            })
        })
        .collect()
}

/// The lattice homomorphism `L(target) → L(source)` of a validated morphism
/// (`□_S`, `□_P` or the pullback `f⁻¹`).
pub fn hom_from_morphism(
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Result<LatticeHom> {
    spaces::validate_morphism(m, source, target)?.into_result()?;
    let table = stable_map(m, source, target)?;
    let from = Arc::new(lattice_from(target)?);
    let to = Arc::new(lattice_from(source)?);
    LatticeHom::new(from, to, table)
}

/// A successful round trip: the lattice rebuilt from a dual of `A`, with an
/// isomorphism `A → reconstructed`.
#[derive(Debug, Clone)]
pub struct RoundTrip {
    pub category: Category,
    pub reconstructed: Lattice,
    pub iso: Vec<usize>,
}

/// Dualize `a` into `category`, rebuild the lattice and find an isomorphism
/// back to `a`.
pub fn check_roundtrip(a: &Lattice, category: Category) -> Result<RoundTrip> {
    let reconstructed = lattice_from(&dual(a, category)?)?;
    let iso = lattice_iso(a, &reconstructed).ok_or_else(|| {
        Error::WitnessFailed(format!(
            "{} rebuilt from its {} dual has {} elements and is not isomorphic to it",
            a.name(),
            category,
            reconstructed.len()
        ))
    })?;
    Ok(RoundTrip {
        category,
        reconstructed,
        iso,
    })
}
