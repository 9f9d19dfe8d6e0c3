//! Urquhart spaces: a set with two quasi-orders and the antitone Galois
//! connection `φ = −↓₂`, `ψ = −↓₁` between their upsets.

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::subset::Subset;

use super::morphism::RelationPair;
use super::polarity::{check_pair_clauses, check_shape, PairClauses, PairSpace};
use super::report::{Checker, ValidationReport, Witness};
use super::stable::{intersection_closure, FamilyOrder, StableFamily};

/// Which half of the Galois connection to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// `φC = −↓₂C`.
    Phi,
    /// `ψD = −↓₁D`.
    Psi,
}

/// A finite Urquhart space `(Z, ≤₁, ≤₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrqSpace {
    labels: Vec<String>,
    first_order: Relation,
    second_order: Relation,
}

impl UrqSpace {
    /// Structural constructor: both relations must live on `labels`.
    pub fn new(labels: Vec<String>, first_order: Relation, second_order: Relation) -> Result<Self> {
        for q in [&first_order, &second_order] {
            if q.left_len() != labels.len() || q.right_len() != labels.len() {
                return Err(Error::SideMismatch {
                    expected: labels.len(),
                    found: q.left_len(),
                });
            }
        }
        Ok(UrqSpace {
            labels,
            first_order,
            second_order,
        })
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

    /// `≤₁` as a relation (`x ≤₁ y` iff `first_order.contains(x, y)`).
    pub fn first_order(&self) -> &Relation {
        &self.first_order
    }

    /// `≤₂` as a relation.
    pub fn second_order(&self) -> &Relation {
        &self.second_order
    }

    pub fn with_orders(&self, first_order: Relation, second_order: Relation) -> Result<Self> {
        UrqSpace::new(self.labels.clone(), first_order, second_order)
    }

    /// `φC = −↓₂C`.
    pub fn phi(&self, c: &Subset) -> Subset {
        self.second_order.preimage(c).complement()
    }

    /// `ψD = −↓₁D`.
    pub fn psi(&self, d: &Subset) -> Subset {
        self.first_order.preimage(d).complement()
    }

    pub fn galois(&self, which: Polarity, s: &Subset) -> Subset {
        match which {
            Polarity::Phi => self.phi(s),
            Polarity::Psi => self.psi(s),
        }
    }

    /// `ℒ𝒰` ordered by inclusion (the reconstructed lattice).
    pub fn stable_family(&self) -> Result<StableFamily> {
        StableFamily::new(
            "LU",
            &self.labels,
            self.stable_sets(),
            FamilyOrder::Inclusion,
        )
    }

    /// `LC = ℒ𝒰` ordered by reverse inclusion.
    pub fn left_closed(&self) -> Result<StableFamily> {
        StableFamily::new(
            "LC",
            &self.labels,
            self.stable_sets(),
            FamilyOrder::ReverseInclusion,
        )
    }

    /// `RC = {φC : C ∈ ℒ𝒰}` ordered by reverse inclusion.
    pub fn right_closed(&self) -> Result<StableFamily> {
        let members = self.stable_sets().iter().map(|c| self.phi(c)).collect();
        StableFamily::new("RC", &self.labels, members, FamilyOrder::ReverseInclusion)
    }

    /// The identity morphism `(≤₁, ≤₂)`.
    pub fn identity(&self) -> RelationPair {
        RelationPair {
            left: self.first_order.clone(),
            right: self.second_order.clone(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let l = &self.labels;
        let (q1, q2) = (&self.first_order, &self.second_order);
        let mut ck = Checker::new("Urquhart space");
        ck.clause(
            "urq.orders-are-quasi-orders",
            "≤₁ and ≤₂ are reflexive and transitive",
            || {
                [q1, q2]
                    .into_iter()
                    .position(|q| !q.is_reflexive() || !q.is_transitive())
                    .map(|i| vec![Witness::new("order", if i == 0 { "≤₁" } else { "≤₂" })])
            },
        );
        ck.clause(
            "urq.doubly-ordered",
            "x ≤₁ y and x ≤₂ y imply x = y",
            || {
                q1.pairs()
                    .into_iter()
                    .find(|&(a, b)| a != b && q2.contains(a, b))
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        ck.vacuous(
            "urq.stable-sets-form-closed-subbasis",
            "ℒ𝒰 ∪ φ[ℒ𝒰] is a closed subbasis",
        );
        ck.vacuous(
            "urq.lattice-operations-closed",
            "φ(C₁ ∩ C₂) and ψ(φC₁ ∩ φC₂) are closed",
        );
        let stable = self.stable_sets();
        ck.clause(
            "urq.first-order-separated",
            "x ≰₁ y implies some C ∈ ℒ𝒰 with x ∈ C and y ∉ C",
            || {
                non_pairs(q1)
                    .find(|&(a, b)| !stable.iter().any(|c| c.contains(a) && !c.contains(b)))
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        let phis: Vec<Subset> = stable.iter().map(|c| self.phi(c)).collect();
        ck.clause(
            "urq.second-order-separated",
            "x ≰₂ y implies some C ∈ ℒ𝒰 with x ∈ φC and y ∉ φC",
            || {
                non_pairs(q2)
                    .find(|&(a, b)| !phis.iter().any(|c| c.contains(a) && !c.contains(b)))
                    .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
            },
        );
        ck.finish()
    }
}

fn non_pairs(q: &Relation) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = q.left_len();
    (0..n)
        .flat_map(move |a| (0..n).map(move |b| (a, b)))
        .filter(move |&(a, b)| !q.contains(a, b))
}

impl PairSpace for UrqSpace {
    fn left_labels(&self) -> &[String] {
        &self.labels
    }

    fn right_labels(&self) -> &[String] {
        &self.labels
    }

    /// Every `ψφ`-fixed set is an intersection of sets `ψ{z} = −↓₁z`, so the
    /// candidates are generated that way and filtered by the fixed-point
    /// and upset conditions.
    fn stable_sets(&self) -> Vec<Subset> {
        let n = self.len();
        let generators: Vec<Subset> = (0..n).map(|z| self.psi(&Subset::singleton(n, z))).collect();
        intersection_closure(n, &generators)
            .into_iter()
            .filter(|c| self.is_stable(c))
            .collect()
    }

    fn is_stable(&self, c: &Subset) -> bool {
        let up = self.first_order.image(c);
        up == *c && self.psi(&self.phi(c)) == *c
    }

    fn polar(&self, s: &Subset) -> Subset {
        self.phi(s)
    }
}

const CLAUSES: PairClauses = PairClauses {
    shape: "urq-mor.relations-have-matching-carriers",
    boxes: "urq-mor.box-preserves-stable-sets",
    boxes_text: "□_P C′ ∈ ℒ𝒰 and φ□_P C′ = □_Q φ′C′",
    left: "urq-mor.first-relation-determined-by-stable-sets",
    left_text: "z not P z′ implies some C′ with z ∈ □_P C′ and z′ ∉ C′",
    right: "urq-mor.second-relation-determined-by-stable-sets",
    right_text: "z not Q z′ implies some C′ with z ∈ □_Q φ′C′ and z′ ∉ φ′C′",
};

/// Check an Urquhart morphism `(P, Q): source → target`.
pub fn validate_morphism(
    source: &UrqSpace,
    target: &UrqSpace,
    m: &RelationPair,
) -> ValidationReport {
    let mut ck = Checker::new("Urquhart morphism");
    check_shape(&mut ck, &CLAUSES, source, target, m);
    if ck.has_failed() {
        return ck.finish();
    }
    check_pair_clauses(&mut ck, &CLAUSES, source, target, m);
    ck.clause(
        "urq-mor.serial-on-common-successors",
        "P[z] ∩ Q[z] ≠ ∅",
        || serial_defect(m).map(|z| vec![Witness::new("z", &source.labels[z])]),
    );
    ck.finish()
}

/// First `z` with `P[z] ∩ Q[z] = ∅`.
pub(crate) fn serial_defect(m: &RelationPair) -> Option<usize> {
    (0..m.left.left_len()).find(|&z| !m.left.row(z).intersects(m.right.row(z)))
}
