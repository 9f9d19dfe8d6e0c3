//! Finite bounded lattices and their dual representations.
//!
//! The crate covers seven ways of representing a finite bounded lattice `A`
//! by a "dual" structure, the translations between them, and the machinery
//! that reconstructs `A` (and its homomorphisms) from each representation:
//!
//! * the filter lattice `Filt(A)` ([`lattice::Lattice::filt`]);
//! * Celani–González spaces ([`spaces::CgSpace`]);
//! * Dunn–Hartonas spaces ([`spaces::DhSpace`]);
//! * Gehrke–van Gool spaces ([`spaces::GvgSpace`]);
//! * Hartung spaces ([`spaces::HgSpace`]);
//! * Urquhart doubly ordered spaces ([`spaces::UrqSpace`]);
//! * Ploščica spaces ([`spaces::PloSpace`]).
//!
//! Everything is finite: topological clauses of the general theory collapse
//! to their combinatorial content, and validators say which clauses are
//! vacuous on finite carriers.

#![allow(clippy::needless_range_loop)]

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod functors;
pub mod hom;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod reconstruction;
pub mod relation;
pub mod spaces;
pub mod subset;

pub use error::{Error, Result};
pub use hom::{enumerate_homs, AdjointSide, LatticeHom, MonotoneMap};
pub use iso::lattice_iso;
pub use lattice::{DPrimeMode, Lattice};
pub use poset::Poset;
pub use relation::{Modality, Relation};
pub use spaces::{
    Category, CgMorphism, CgSpace, DhMorphism, DhSpace, DualMorphism, DualSpace, FiltMorphism,
    GvgSpace, HgSpace, PloSpace, RelationPair, UrqSpace, ValidationReport,
};
pub use subset::Subset;
