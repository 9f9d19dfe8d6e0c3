//! Hartung spaces: a relation between two sets whose orders are derived
//! from the relation itself.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::relation::Relation;
use crate::subset::Subset;

use super::gvg::{relation_preserved_defect, separation_by_stable};
use super::morphism::RelationPair;
use super::polarity::{check_pair_clauses, check_shape, PairClauses, PairSpace};
use super::report::{Checker, ValidationReport, Witness};
use super::stable::{intersection_closure, FamilyOrder, StableFamily};

/// A finite Hartung space `(X, R, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgSpace {
    x_labels: Vec<String>,
    y_labels: Vec<String>,
    relation: Relation,
}

impl HgSpace {
    pub fn new(x_labels: Vec<String>, y_labels: Vec<String>, relation: Relation) -> Result<Self> {
        if relation.left_len() != x_labels.len() || relation.right_len() != y_labels.len() {
            return Err(Error::SideMismatch {
                expected: x_labels.len() * y_labels.len(),
                found: relation.left_len() * relation.right_len(),
            });
        }
        Ok(HgSpace {
            x_labels,
            y_labels,
            relation,
        })
    }

    pub fn x_labels(&self) -> &[String] {
        &self.x_labels
    }

    pub fn y_labels(&self) -> &[String] {
        &self.y_labels
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn with_relation(&self, relation: Relation) -> Result<Self> {
        HgSpace::new(self.x_labels.clone(), self.y_labels.clone(), relation)
    }

    /// The derived quasi-orders: `x ≤ x′` iff `R[x′] ⊆ R[x]` and `y ≤ y′`
    /// iff `R⁻¹[y′] ⊆ R⁻¹[y]`.
    pub fn derived_quasi_orders(&self) -> (Relation, Relation) {
        derived_orders_of(&self.relation)
    }

    /// The derived orders as posets, or the first pair violating
    /// antisymmetry.
    pub fn derived_orders(&self) -> Result<(Poset, Poset)> {
        let (lx, ly) = self.derived_quasi_orders();
        Ok((
            Poset::new(lx, self.x_labels.clone())?,
            Poset::new(ly, self.y_labels.clone())?,
        ))
    }

    /// The maximal pairs: `(x, y) ∈ R` with `x` `y`-maximal and `y`
    /// `x`-maximal, in lexicographic order.
    pub fn maximal_pairs(&self) -> Vec<(usize, usize)> {
        let (lx, ly) = self.derived_quasi_orders();
        let r = &self.relation;
        r.pairs()
            .into_iter()
            .filter(|&(a, b)| is_y_maximal(r, &lx, a, b) && is_x_maximal(r, &ly, a, b))
            .collect()
    }

    /// `ℒℋ` ordered by inclusion.
    pub fn stable_family(&self) -> Result<StableFamily> {
        StableFamily::new(
            "LH",
            &self.x_labels,
            self.stable_sets(),
            FamilyOrder::Inclusion,
        )
    }

    /// The identity morphism: the pair of derived orders.
    pub fn identity(&self) -> RelationPair {
        let (left, right) = self.derived_quasi_orders();
        RelationPair { left, right }
    }

    pub fn validate(&self) -> ValidationReport {
        let r = &self.relation;
        let (xl, yl) = (&self.x_labels, &self.y_labels);
        let (lx, ly) = self.derived_quasi_orders();
        let mut ck = Checker::new("Hartung space");
        ck.clause(
            "hg.derived-orders-are-partial",
            "the derived orders on X and Y are antisymmetric",
            || {
                if let Some((a, b)) = symmetric_pair(&lx) {
                    return Some(vec![Witness::new("x", &xl[a]), Witness::new("x′", &xl[b])]);
                }
                symmetric_pair(&ly)
                    .map(|(a, b)| vec![Witness::new("y", &yl[a]), Witness::new("y′", &yl[b])])
            },
        );
        ck.vacuous("hg.relation-is-compact", "R is compact in X × Y");
        ck.vacuous(
            "hg.stable-sets-form-subbases",
            "ℒℋ and {−◆A} are closed subbases",
        );
        ck.vacuous(
            "hg.closure-preserves-closed-sets",
            "□◆ and ■◇ preserve closed sets",
        );
        ck.clause(
            "hg.maximal-refinements-exist",
            "x R y implies some x ≤ x′ y-maximal and y ≤ y′ x-maximal",
            || {
                r.pairs()
                    .into_iter()
                    .find(|&(a, b)| {
                        let x_ok = lx
                            .row(a)
                            .iter()
                            .any(|a2| r.contains(a2, b) && is_y_maximal(r, &lx, a2, b));
                        let y_ok = ly
                            .row(b)
                            .iter()
                            .any(|b2| r.contains(a, b2) && is_x_maximal(r, &ly, a, b2));
                        !(x_ok && y_ok)
                    })
                    .map(|(a, b)| vec![Witness::new("x", &xl[a]), Witness::new("y", &yl[b])])
            },
        );
        let stable = self.stable_sets();
        ck.clause(
            "hg.separation-by-stable-sets",
            "x not R y implies some stable A with x ∈ A and y ∉ ◆A",
            || {
                separation_by_stable(r, &stable)
                    .map(|(a, b)| vec![Witness::new("x", &xl[a]), Witness::new("y", &yl[b])])
            },
        );
        ck.finish()
    }
}

pub(crate) fn derived_orders_of(r: &Relation) -> (Relation, Relation) {
    let lx = Relation::from_fn(r.left_len(), r.left_len(), |a, b| {
        r.row(b).is_subset(r.row(a))
    });
    let ly = Relation::from_fn(r.right_len(), r.right_len(), |a, b| {
        r.col(b).is_subset(r.col(a))
    });
    (lx, ly)
}

fn symmetric_pair(q: &Relation) -> Option<(usize, usize)> {
    let n = q.left_len();
    (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .find(|&(a, b)| q.contains(a, b) && q.contains(b, a))
}

/// `x` is `y`-maximal: `x R y` and `x ≤ x′`, `x′ R y` force `x′ = x`.
fn is_y_maximal(r: &Relation, lx: &Relation, a: usize, b: usize) -> bool {
    r.contains(a, b) && lx.row(a).iter().all(|a2| a2 == a || !r.contains(a2, b))
}

/// `y` is `x`-maximal: `x R y` and `y ≤ y′`, `x R y′` force `y′ = y`.
fn is_x_maximal(r: &Relation, ly: &Relation, a: usize, b: usize) -> bool {
    r.contains(a, b) && ly.row(b).iter().all(|b2| b2 == b || !r.contains(a, b2))
}

impl PairSpace for HgSpace {
    fn left_labels(&self) -> &[String] {
        &self.x_labels
    }

    fn right_labels(&self) -> &[String] {
        &self.y_labels
    }

    /// The `□◆`-closed sets: all intersections of sets `X − R⁻¹[y]`.
    fn stable_sets(&self) -> Vec<Subset> {
        let r = &self.relation;
        let generators: Vec<Subset> = (0..r.right_len()).map(|b| r.col(b).complement()).collect();
        intersection_closure(r.left_len(), &generators)
    }

    fn is_stable(&self, s: &Subset) -> bool {
        self.relation.boxed(&self.relation.black_diamond(s)) == *s
    }

    fn polar(&self, s: &Subset) -> Subset {
        self.relation.black_diamond(s).complement()
    }
}

const CLAUSES: PairClauses = PairClauses {
    shape: "hg-mor.relations-have-matching-carriers",
    boxes: "hg-mor.box-preserves-stable-sets",
    boxes_text: "□_S A′ is stable and ◆□_S A′ = ◇_T ◆′A′",
    left: "hg-mor.left-relation-determined-by-stable-sets",
    left_text: "x not S x′ implies some A′ with x ∈ □_S A′ and x′ ∉ A′",
    right: "hg-mor.right-relation-determined-by-stable-sets",
    right_text: "y not T y′ implies some A′ with y ∉ ◇_T ◆′A′ and y′ ∈ ◆′A′",
};

/// Check a Hartung morphism `(S, T): source → target`.
pub fn validate_morphism(source: &HgSpace, target: &HgSpace, m: &RelationPair) -> ValidationReport {
    let mut ck = Checker::new("Hartung morphism");
    check_shape(&mut ck, &CLAUSES, source, target, m);
    if ck.has_failed() {
        return ck.finish();
    }
    check_pair_clauses(&mut ck, &CLAUSES, source, target, m);
    ck.clause(
        "hg-mor.relation-preserved",
        "x R y implies some x S x′, y T y′ with x′ R′ y′",
        || {
            relation_preserved_defect(&source.relation, m, &target.relation).map(|(a, b)| {
                vec![
                    Witness::new("x", &source.x_labels[a]),
                    Witness::new("y", &source.y_labels[b]),
                ]
            })
        },
    );
    ck.finish()
}
