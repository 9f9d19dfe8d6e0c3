//! Ploščica spaces: a set with one reflexive relation encoding the two
//! quasi-orders of an Urquhart space.

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::subset::Subset;

use super::morphism::RelationPair;
use super::polarity::{check_pair_clauses, check_shape, PairClauses, PairSpace};
use super::report::{Checker, ValidationReport, Witness};
use super::stable::{intersection_closure, FamilyOrder, StableFamily};
use super::urq::serial_defect;

/// A finite Ploščica space `(Z, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PloSpace {
    labels: Vec<String>,
    relation: Relation,
}

impl PloSpace {
    pub fn new(labels: Vec<String>, relation: Relation) -> Result<Self> {
        if relation.left_len() != labels.len() || relation.right_len() != labels.len() {
            return Err(Error::SideMismatch {
                expected: labels.len(),
                found: relation.left_len(),
            });
        }
        Ok(PloSpace { labels, relation })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn with_relation(&self, relation: Relation) -> Result<Self> {
        PloSpace::new(self.labels.clone(), relation)
    }

    /// `x ≤₁ z` iff `R[z] ⊆ R[x]`; `y ≤₂ z` iff `R⁻¹[z] ⊆ R⁻¹[y]`.
    pub fn quasi_orders(&self) -> (Relation, Relation) {
        super::hg::derived_orders_of(&self.relation)
    }

    /// `ℒ𝒫` ordered by inclusion.
    pub fn stable_family(&self) -> Result<StableFamily> {
        StableFamily::new(
            "LP",
            &self.labels,
            self.stable_sets(),
            FamilyOrder::Inclusion,
        )
    }

    /// The identity morphism `(≤₁, ≤₂)`.
    pub fn identity(&self) -> RelationPair {
        let (left, right) = self.quasi_orders();
        RelationPair { left, right }
    }

    pub fn validate(&self) -> ValidationReport {
        let (l, r) = (&self.labels, &self.relation);
        let n = self.len();
        let mut ck = Checker::new("Ploščica space");
        ck.clause("plo.relation-is-reflexive", "R is reflexive", || {
            (0..n)
                .find(|&z| !r.contains(z, z))
                .map(|z| vec![Witness::new("z", &l[z])])
        });
        let stable = self.stable_sets();
        let opens: Vec<Subset> = stable
            .iter()
            .map(Subset::complement)
            .chain(stable.iter().map(|c| r.black_diamond(c)))
            .collect();
        ck.vacuous("plo.carrier-is-compact", "Z is compact");
        ck.clause(
            "plo.points-separated-by-subbasis",
            "for x ≠ y some −C or ◆C (C ∈ ℒ𝒫) contains x but not y",
            || {
                (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .find(|&(a, b)| {
                        a != b && !opens.iter().any(|o| o.contains(a) && !o.contains(b))
                    })
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        ck.vacuous(
            "plo.stable-sets-form-subbasis",
            "{−C} ∪ {◆C} is an open subbasis",
        );
        ck.vacuous(
            "plo.lattice-operations-closed",
            "−◆(C₁ ∩ C₂) and □◆(C₁ ∪ C₂) are closed",
        );
        ck.clause(
            "plo.first-separation",
            "R[y] ⊄ R[x] implies some C ∈ ℒ𝒫 with x ∈ C and y ∉ C",
            || {
                (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .find(|&(a, b)| {
                        !r.row(b).is_subset(r.row(a))
                            && !stable.iter().any(|c| c.contains(a) && !c.contains(b))
                    })
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        let images: Vec<Subset> = stable.iter().map(|c| r.black_diamond(c)).collect();
        ck.clause(
            "plo.second-separation",
            "R⁻¹[y] ⊄ R⁻¹[x] implies some C ∈ ℒ𝒫 with x ∉ ◆C and y ∈ ◆C",
            || {
                (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .find(|&(a, b)| {
                        !r.col(b).is_subset(r.col(a))
                            && !images.iter().any(|d| !d.contains(a) && d.contains(b))
                    })
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        ck.clause(
            "plo.relation-factors-through-a-point",
            "x R y implies some z with R[z] ⊆ R[x] and R⁻¹[z] ⊆ R⁻¹[y]",
            || {
                r.pairs()
                    .into_iter()
                    .find(|&(a, b)| {
                        !(0..n)
                            .any(|z| r.row(z).is_subset(r.row(a)) && r.col(z).is_subset(r.col(b)))
                    })
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        ck.finish()
    }
}

impl PairSpace for PloSpace {
    fn left_labels(&self) -> &[String] {
        &self.labels
    }

    fn right_labels(&self) -> &[String] {
        &self.labels
    }

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
    shape: "plo-mor.relations-have-matching-carriers",
    boxes: "plo-mor.box-preserves-stable-sets",
    boxes_text: "□_P C′ ∈ ℒ𝒫 and ◆□_P C′ = ◇_Q ◆′C′",
    left: "plo-mor.first-relation-determined-by-stable-sets",
    left_text: "z not P z′ implies some C′ with z ∈ □_P C′ and z′ ∉ C′",
    right: "plo-mor.second-relation-determined-by-stable-sets",
    right_text: "z not Q z′ implies some C′ with z ∉ ◇_Q ◆′C′ and z′ ∈ ◆′C′",
};

/// Check a Ploščica morphism `(P, Q): source → target`.
pub fn validate_morphism(
    source: &PloSpace,
    target: &PloSpace,
    m: &RelationPair,
) -> ValidationReport {
    let mut ck = Checker::new("Ploščica morphism");
    check_shape(&mut ck, &CLAUSES, source, target, m);
    if ck.has_failed() {
        return ck.finish();
    }
    check_pair_clauses(&mut ck, &CLAUSES, source, target, m);
    ck.clause(
        "plo-mor.serial-on-common-successors",
        "P[z] ∩ Q[z] ≠ ∅",
        || serial_defect(m).map(|z| vec![Witness::new("z", &source.labels[z])]),
    );
    ck.finish()
}
