//! Dual spaces, their stable families, and validators for every space and
//! morphism definition.
//!
//! On finite carriers every topology is discrete, so clauses that are
//! purely topological hold automatically; validators record those as
//! "vacuous (finite)" and check the remaining combinatorial content
//! literally.

pub mod cg;
pub mod dh;
pub mod gvg;
pub mod hg;
pub mod morphism;
pub mod plo;
pub mod polarity;
pub mod report;
pub mod stable;
pub mod urq;

pub use cg::CgSpace;
pub use dh::DhSpace;
pub use gvg::GvgSpace;
pub use hg::HgSpace;
pub use morphism::{Category, CgMorphism, DhMorphism, DualMorphism, FiltMorphism, RelationPair};
pub use plo::PloSpace;
pub use polarity::PairSpace;
pub use report::{ClauseOutcome, ClauseStatus, ValidationReport, Witness};
pub use stable::{FamilyOrder, StableFamily};
pub use urq::{Polarity, UrqSpace};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::Poset;
use crate::relation::{Modality, Relation};
use crate::subset::Subset;

use report::Checker;

/// Apply `◇`, `□`, `◆` or `■` of a relation.
pub fn modal(relation: &Relation, subset: &Subset, which: Modality) -> Result<Subset> {
    relation.modal(which, subset)
}

/// `X₀ = ⋃{max R⁻¹[y] : y ∈ Y}` and `Y₀ = ⋃{max R[x] : x ∈ X}`.
pub fn x0_y0(x: &Poset, relation: &Relation, y: &Poset) -> (Subset, Subset) {
    let mut x0 = Subset::empty(x.len());
    for b in 0..y.len() {
        x0.union_with(&x.maximal(relation.col(b)));
    }
    let mut y0 = Subset::empty(y.len());
    for a in 0..x.len() {
        y0.union_with(&y.maximal(relation.row(a)));
    }
    (x0, y0)
}

/// A space of one of the seven dual categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualSpace {
    /// A filter lattice (any finite lattice plays one).
    Filt(Lattice),
    Cg(CgSpace),
    Dh(DhSpace),
    Gvg(GvgSpace),
    Hg(HgSpace),
    Urq(UrqSpace),
    Plo(PloSpace),
}

impl DualSpace {
    pub fn category(&self) -> Category {
        match self {
            DualSpace::Filt(_) => Category::Filt,
            DualSpace::Cg(_) => Category::Cg,
            DualSpace::Dh(_) => Category::Dh,
            DualSpace::Gvg(_) => Category::Gvg,
            DualSpace::Hg(_) => Category::Hg,
            DualSpace::Urq(_) => Category::Urq,
            DualSpace::Plo(_) => Category::Plo,
        }
    }

    /// Check the space axioms of its category.
    pub fn validate(&self) -> ValidationReport {
        match self {
            DualSpace::Filt(l) => {
                let mut ck = Checker::new(format!("filter lattice {}", l.name()));
                ck.vacuous(
                    "filt.lattice-is-coherent",
                    "every finite lattice is coherent",
                );
                ck.finish()
            }
            DualSpace::Cg(s) => s.validate(),
            DualSpace::Dh(s) => s.validate(),
            DualSpace::Gvg(s) => s.validate(),
            DualSpace::Hg(s) => s.validate(),
            DualSpace::Urq(s) => s.validate(),
            DualSpace::Plo(s) => s.validate(),
        }
    }

    /// The family of stable sets with its lattice structure.  Filter
    /// lattices use `{↑k}` ordered by inclusion, DH-spaces `CLF(X)`.
    pub fn stable_family(&self) -> Result<StableFamily> {
        match self {
            DualSpace::Filt(l) => {
                let members = (0..l.len()).map(|k| l.principal_filter(k)).collect();
                StableFamily::with_labels(
                    format!("KOF({})", l.name()),
                    l.len(),
                    members,
                    FamilyOrder::Inclusion,
                    |s| format!("↑{}", l.label(l.meet_all(s.iter()))),
                )
            }
            DualSpace::Cg(s) => s.closed_family(),
            DualSpace::Dh(s) => s.clf(),
            DualSpace::Gvg(s) => s.stable_family(),
            DualSpace::Hg(s) => s.stable_family(),
            DualSpace::Urq(s) => s.stable_family(),
            DualSpace::Plo(s) => s.stable_family(),
        }
    }

    /// The identity morphism of the space.
    pub fn identity(&self) -> DualMorphism {
        match self {
            DualSpace::Filt(l) => DualMorphism::Filt(FiltMorphism {
                map: (0..l.len()).collect(),
            }),
            DualSpace::Cg(s) => DualMorphism::Cg(s.identity()),
            DualSpace::Dh(s) => DualMorphism::Dh(s.identity()),
            DualSpace::Gvg(s) => DualMorphism::Gvg(s.identity()),
            DualSpace::Hg(s) => DualMorphism::Hg(s.identity()),
            DualSpace::Urq(s) => DualMorphism::Urq(s.identity()),
            DualSpace::Plo(s) => DualMorphism::Plo(s.identity()),
        }
    }
}

fn mismatch(expected: Category, found: Category) -> Error {
    Error::CategoryMismatch(expected.name().into(), found.name().into())
}

/// Check a morphism between two spaces of its category.
pub fn validate_morphism(
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Result<ValidationReport> {
    use DualMorphism as M;
    use DualSpace as S;
    Ok(match (m, source, target) {
        (M::Filt(f), S::Filt(a), S::Filt(b)) => {
            let mut ck = Checker::new(format!(
                "filter-lattice morphism {} → {}",
                a.name(),
                b.name()
            ));
            let shape_ok = f.map.len() == a.len() && f.map.iter().all(|&v| v < b.len());
            ck.clause(
                "filt-mor.map-has-matching-carriers",
                "f: X₁ → X₂",
                || {
                    (!shape_ok).then(|| {
                        vec![Witness::new(
                            "shape",
                            "map table does not match the carriers",
                        )]
                    })
                },
            );
            if shape_ok {
                ck.clause(
                    "filt-mor.map-is-coherent",
                    "f preserves meets and the top, and its lower adjoint preserves finite meets",
                    || morphism::coherent_map_defect(a, b, &f.map),
                );
            }
            ck.finish()
        }
        (M::Cg(s), S::Cg(a), S::Cg(b)) => cg::validate_morphism(a, b, s),
        (M::Dh(f), S::Dh(a), S::Dh(b)) => dh::validate_morphism(a, b, f),
        (M::Gvg(p), S::Gvg(a), S::Gvg(b)) => gvg::validate_morphism(a, b, p),
        (M::Hg(p), S::Hg(a), S::Hg(b)) => hg::validate_morphism(a, b, p),
        (M::Urq(p), S::Urq(a), S::Urq(b)) => urq::validate_morphism(a, b, p),
        (M::Plo(p), S::Plo(a), S::Plo(b)) => plo::validate_morphism(a, b, p),
        _ => {
            let found = if source.category() != m.category() {
                source.category()
            } else {
                target.category()
            };
            return Err(mismatch(m.category(), found));
        }
    })
}

/// The composite `second ∘ first` of `first: A → B` and `second: B → C`:
/// function composition for filter lattices and DH-spaces, `⋆` otherwise.
/// `codomain` is `C`, whose stable sets the `⋆` rule quantifies over.
pub fn star_compose(
    second: &DualMorphism,
    first: &DualMorphism,
    codomain: &DualSpace,
) -> Result<DualMorphism> {
    use DualMorphism as M;
    use DualSpace as S;
    if second.category() != first.category() {
        return Err(mismatch(first.category(), second.category()));
    }
    if codomain.category() != first.category() {
        return Err(mismatch(first.category(), codomain.category()));
    }
    let not_composable = || {
        Error::NotComposable(format!(
            "{} morphisms do not share a middle space",
            first.category()
        ))
    };
    Ok(match (second, first, codomain) {
        (M::Filt(g), M::Filt(f), S::Filt(_)) => {
            if f.map.iter().any(|&v| v >= g.map.len()) {
                return Err(not_composable());
            }
            M::Filt(FiltMorphism {
                map: f.map.iter().map(|&v| g.map[v]).collect(),
            })
        }
        (M::Dh(g), M::Dh(f), S::Dh(_)) => {
            if f.x_map.iter().any(|&v| v >= g.x_map.len())
                || f.y_map.iter().any(|&v| v >= g.y_map.len())
            {
                return Err(not_composable());
            }
            M::Dh(dh::compose(g, f))
        }
        (M::Cg(g), M::Cg(f), S::Cg(c)) => {
            if f.relation.right_len() != g.relation.left_len() || g.relation.right_len() != c.len()
            {
                return Err(not_composable());
            }
            M::Cg(cg::star(g, f, c))
        }
        (M::Gvg(g), M::Gvg(f), S::Gvg(c)) => M::Gvg(pair_star(g, f, c).ok_or_else(not_composable)?),
        (M::Hg(g), M::Hg(f), S::Hg(c)) => M::Hg(pair_star(g, f, c).ok_or_else(not_composable)?),
        (M::Urq(g), M::Urq(f), S::Urq(c)) => M::Urq(pair_star(g, f, c).ok_or_else(not_composable)?),
        (M::Plo(g), M::Plo(f), S::Plo(c)) => M::Plo(pair_star(g, f, c).ok_or_else(not_composable)?),
        _ => unreachable!("categories were checked above"),
    })
}

fn pair_star<S: PairSpace>(
    second: &RelationPair,
    first: &RelationPair,
    third: &S,
) -> Option<RelationPair> {
    let ok = first.left.right_len() == second.left.left_len()
        && first.right.right_len() == second.right.left_len()
        && second.left.right_len() == third.left_labels().len()
        && second.right.right_len() == third.right_labels().len();
    ok.then(|| polarity::star_pair(second, first, third))
}
