//! Error type shared by every module of the crate.
//!
//! Axiom violations of dual spaces and morphisms are *not* errors: validators
//! return them as data (see [`crate::spaces::ValidationReport`]).  The
//! variants here signal malformed input or broken internal invariants.

use thiserror::Error;

/// Which bound of a poset is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Top,
    Bottom,
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Top => f.write_str("top"),
            Bound::Bottom => f.write_str("bottom"),
        }
    }
}

/// Why a pair of elements prevents a poset from being a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeDefect {
    NoMeet,
    NoJoin,
}

impl std::fmt::Display for LatticeDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeDefect::NoMeet => f.write_str("greatest lower bound absent or not unique"),
            LatticeDefect::NoJoin => f.write_str("least upper bound absent or not unique"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("not a lattice: pair ({left}, {right}): {defect}")]
    NotALattice {
        left: String,
        right: String,
        defect: LatticeDefect,
    },
    #[error("poset has no {0} element")]
    NoBound(Bound),
    #[error("a distributive meet needs a nonempty family")]
    EmptyFamily,
    #[error("map is not monotone: {0} ≤ {1} but the images are not ordered")]
    NotMonotone(String, String),
    #[error("requested size {requested} exceeds the supported bound {limit}")]
    BoundTooLarge { requested: usize, limit: usize },
    #[error("subset over a carrier of size {found} used where size {expected} is required")]
    SideMismatch { expected: usize, found: usize },
    #[error("derived order is not antisymmetric: `{0}` and `{1}` are distinct but mutually below each other")]
    NotAntisymmetric(String, String),
    #[error("input failed validation: {0}")]
    NotValidated(String),
    #[error("morphisms of categories {0} and {1} cannot be combined")]
    CategoryMismatch(String, String),
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("isomorphism witness failed: {0}")]
    WitnessFailed(String),
    #[error("natural component is not an isomorphism: {0}")]
    ComponentNotIso(String),
    #[error("map is not a bounded lattice homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("duplicate or unknown element name `{0}`")]
    BadElementName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
