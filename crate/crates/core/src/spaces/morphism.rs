//! Morphism payloads of the dual categories.

use std::fmt;

use crate::lattice::Lattice;
use crate::relation::Relation;

use super::report::Witness;

/// The seven dual categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    /// Filter lattices with meet-preserving maps whose lower adjoints
    /// preserve finite meets.
    Filt,
    /// Celani–González spaces.
    Cg,
    /// Dunn–Hartonas spaces.
    Dh,
    /// Gehrke–van Gool spaces.
    Gvg,
    /// Hartung spaces.
    Hg,
    /// Urquhart spaces.
    Urq,
    /// Ploščica spaces.
    Plo,
}

impl Category {
    pub const ALL: [Category; 7] = [
        Category::Filt,
        Category::Cg,
        Category::Dh,
        Category::Gvg,
        Category::Hg,
        Category::Urq,
        Category::Plo,
    ];

    /// Short lowercase name, as used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Category::Filt => "filt",
            Category::Cg => "cg",
            Category::Dh => "dh",
            Category::Gvg => "gvg",
            Category::Hg => "hg",
            Category::Urq => "urq",
            Category::Plo => "plo",
        }
    }

    pub fn from_name(name: &str) -> Option<Category> {
        Category::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A map between filter lattices (or any pair of finite lattices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltMorphism {
    pub map: Vec<usize>,
}

/// A DH-morphism: a pair of maps `f: X₁ → X₂`, `g: Y₁ → Y₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhMorphism {
    pub x_map: Vec<usize>,
    pub y_map: Vec<usize>,
}

/// A pair of relations `(S, T)` or `(P, Q)`: `left` relates the first
/// carriers (or `Z`), `right` the second carriers (or `Z` again).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPair {
    pub left: Relation,
    pub right: Relation,
}

/// A CG-morphism: a single relation `S ⊆ X₁ × X₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgMorphism {
    pub relation: Relation,
}

/// A morphism of one of the dual categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualMorphism {
    Filt(FiltMorphism),
    Cg(CgMorphism),
    Dh(DhMorphism),
    Gvg(RelationPair),
    Hg(RelationPair),
    Urq(RelationPair),
    Plo(RelationPair),
}

impl DualMorphism {
    pub fn category(&self) -> Category {
        match self {
            DualMorphism::Filt(_) => Category::Filt,
            DualMorphism::Cg(_) => Category::Cg,
            DualMorphism::Dh(_) => Category::Dh,
            DualMorphism::Gvg(_) => Category::Gvg,
            DualMorphism::Hg(_) => Category::Hg,
            DualMorphism::Urq(_) => Category::Urq,
            DualMorphism::Plo(_) => Category::Plo,
        }
    }

    /// The relation pair of a GvG, Hg, Urq or Plo morphism.
    pub fn as_pair(&self) -> Option<&RelationPair> {
        match self {
            DualMorphism::Gvg(p)
            | DualMorphism::Hg(p)
            | DualMorphism::Urq(p)
            | DualMorphism::Plo(p) => Some(p),
            _ => None,
        }
    }
}

/// Why a table fails to be a morphism of coherent lattices: it must
/// preserve binary meets and the top, and its lower adjoint (which then
/// exists) must preserve binary meets and the top.  Returns witnesses.
pub(crate) fn coherent_map_defect(
    source: &Lattice,
    target: &Lattice,
    map: &[usize],
) -> Option<Vec<Witness>> {
    if map[source.top()] != target.top() {
        return Some(vec![Witness::new("top", source.label(source.top()))]);
    }
    let n = source.len();
    for a in 0..n {
        for b in 0..n {
            if map[source.meet(a, b)] != target.meet(map[a], map[b]) {
                return Some(vec![
                    Witness::new("meet not preserved at", source.label(a)),
                    Witness::new("and", source.label(b)),
                ]);
            }
        }
    }
    // lower adjoint ℓ(y) = ⋀{x : y ≤ f(x)}
    let lower: Vec<usize> = (0..target.len())
        .map(|y| source.meet_all((0..n).filter(|&x| target.leq(y, map[x]))))
        .collect();
    if lower[target.top()] != source.top() {
        return Some(vec![Witness::new(
            "lower adjoint moves the top",
            target.label(target.top()),
        )]);
    }
    for a in 0..target.len() {
        for b in 0..target.len() {
            if lower[target.meet(a, b)] != source.meet(lower[a], lower[b]) {
                return Some(vec![
                    Witness::new("lower adjoint breaks the meet of", target.label(a)),
                    Witness::new("and", target.label(b)),
                ]);
            }
        }
    }
    None
}
