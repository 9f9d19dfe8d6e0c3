//! Object and morphism translations between finite lattices and the seven
//! dual categories.
//!
//! Every dual category is contravariant to lattices: a homomorphism
//! `α: A → B` yields a dual morphism from the dual of `B` to the dual of
//! `A`.  [`Duals`] bundles all representations of one lattice and
//! [`DualHoms`] all translations of one homomorphism.

pub mod cg_translations;
pub mod chain;
pub mod lattice_side;

use std::fmt;

pub use cg_translations::{cg_from_filt, cg_from_filt_mor, filt_from_cg, filt_from_cg_mor};
pub use chain::{
    functor_d, functor_d_mor, functor_g, functor_g_mor, functor_hg, functor_hg_mor, functor_p,
    functor_p_inv, functor_u, functor_u_mor,
};
pub use lattice_side::{
    cg_of, cg_of_hom, dh_of, dh_of_hom, e_functor, e_functor_mor, filt_of_hom, nu_map,
};

use crate::error::Result;
use crate::hom::LatticeHom;
use crate::lattice::Lattice;
use crate::spaces::{
    Category, CgMorphism, CgSpace, DhMorphism, DhSpace, DualMorphism, DualSpace, FiltMorphism,
    GvgSpace, HgSpace, PloSpace, RelationPair, UrqSpace,
};

/// The named functors of the diagram of equivalences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctorTag {
    /// Lattice → DH-space.
    DhOfLat,
    /// DH → GvG.
    G,
    /// GvG → Hartung.
    H,
    /// Hartung → Urquhart.
    U,
    /// Urquhart → Ploščica.
    P,
    /// Ploščica → Urquhart.
    PInv,
    /// Urquhart → DH.
    D,
    /// Lattice → CG-space.
    CgOfLat,
    /// Filter lattice → CG-space.
    M,
    /// CG-space → filter lattice.
    Hcg,
    /// Coherent lattice → DH-space.
    E,
}

impl FunctorTag {
    pub const ALL: [FunctorTag; 11] = [
        FunctorTag::DhOfLat,
        FunctorTag::G,
        FunctorTag::H,
        FunctorTag::U,
        FunctorTag::P,
        FunctorTag::PInv,
        FunctorTag::D,
        FunctorTag::CgOfLat,
        FunctorTag::M,
        FunctorTag::Hcg,
        FunctorTag::E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctorTag::DhOfLat => "DH-of-Lat",
            FunctorTag::G => "G",
            FunctorTag::H => "H",
            FunctorTag::U => "U",
            FunctorTag::P => "P",
            FunctorTag::PInv => "P⁻¹",
            FunctorTag::D => "D",
            FunctorTag::CgOfLat => "CG-of-Lat",
            FunctorTag::M => "M",
            FunctorTag::Hcg => "Hcg",
            FunctorTag::E => "E",
        }
    }
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every dual representation of one lattice `A`: `Filt(A)`, the CG-space of
/// `A`, `DH(A)` and its images along `G`, `H`, `U` and `P`.
#[derive(Debug, Clone)]
pub struct Duals {
    pub lattice: Lattice,
    pub filt: Lattice,
    pub cg: CgSpace,
    pub dh: DhSpace,
    pub gvg: GvgSpace,
    pub hg: HgSpace,
    pub urq: UrqSpace,
    pub plo: PloSpace,
}

impl Duals {
    pub fn of(a: &Lattice) -> Result<Self> {
        let dh = dh_of(a);
        let gvg = functor_g(&dh)?;
        let hg = functor_hg(&gvg)?;
        let urq = functor_u(&hg)?;
        let plo = functor_p(&urq);
        Ok(Duals {
            lattice: a.clone(),
            filt: a.filt(),
            cg: cg_of(a),
            dh,
            gvg,
            hg,
            urq,
            plo,
        })
    }

    /// The representation in one category.
    pub fn space(&self, category: Category) -> DualSpace {
        match category {
            Category::Filt => DualSpace::Filt(self.filt.clone()),
            Category::Cg => DualSpace::Cg(self.cg.clone()),
            Category::Dh => DualSpace::Dh(self.dh.clone()),
            Category::Gvg => DualSpace::Gvg(self.gvg.clone()),
            Category::Hg => DualSpace::Hg(self.hg.clone()),
            Category::Urq => DualSpace::Urq(self.urq.clone()),
            Category::Plo => DualSpace::Plo(self.plo.clone()),
        }
    }
}

/// The dual of `A` in one category.
pub fn dual(a: &Lattice, category: Category) -> Result<DualSpace> {
    Ok(match category {
        Category::Filt => DualSpace::Filt(a.filt()),
        Category::Cg => DualSpace::Cg(cg_of(a)),
        Category::Dh => DualSpace::Dh(dh_of(a)),
        _ => Duals::of(a)?.space(category),
    })
}

/// Every dual of a homomorphism `α: A → B`, each a morphism from the dual of
/// `B` to the dual of `A`.
#[derive(Debug, Clone)]
pub struct DualHoms {
    pub filt: FiltMorphism,
    pub cg: CgMorphism,
    pub dh: DhMorphism,
    pub gvg: RelationPair,
    pub hg: RelationPair,
    pub urq: RelationPair,
    pub plo: RelationPair,
}

impl DualHoms {
    /// `source` holds the duals of `A = α.source()`, `target` those of
    /// `B = α.target()`.
    pub fn of(alpha: &LatticeHom, source: &Duals, target: &Duals) -> DualHoms {
        let dh = dh_of_hom(alpha);
        let gvg = functor_g_mor(&target.dh, &source.dh, &dh);
        let hg = functor_hg_mor(&target.gvg, &source.gvg, &gvg);
        let urq = functor_u_mor(&target.hg, &source.hg, &hg);
        DualHoms {
            filt: filt_of_hom(alpha),
            cg: cg_of_hom(alpha),
            dh,
            gvg,
            hg,
            plo: urq.clone(),
            urq,
        }
    }

    pub fn morphism(&self, category: Category) -> DualMorphism {
        match category {
            Category::Filt => DualMorphism::Filt(self.filt.clone()),
            Category::Cg => DualMorphism::Cg(self.cg.clone()),
            Category::Dh => DualMorphism::Dh(self.dh.clone()),
            Category::Gvg => DualMorphism::Gvg(self.gvg.clone()),
            Category::Hg => DualMorphism::Hg(self.hg.clone()),
            Category::Urq => DualMorphism::Urq(self.urq.clone()),
            Category::Plo => DualMorphism::Plo(self.plo.clone()),
        }
    }
}
