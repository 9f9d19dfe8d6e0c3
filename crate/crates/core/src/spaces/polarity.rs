//! Machinery shared by the four relation-pair categories (GvG, Hartung,
//! Urquhart, Ploščica).
//!
//! Each of these spaces has a family `ℒ` of stable subsets of its left
//! carrier and a map `ρ` sending a stable set to a subset of its right
//! carrier: `ρ(U) = −◆U` for the relational spaces and `ρ(C) = φC` for
//! Urquhart spaces.  A morphism `(S, T)` is then characterised by
//!
//! * `□_S U′ ∈ ℒ` and `ρ(□_S U′) = □_T ρ′(U′)` for `U′ ∈ ℒ′`;
//! * `x S x′` iff `x ∈ □_S U′ ⟹ x′ ∈ U′` for all `U′ ∈ ℒ′`;
//! * `y T y′` iff `y ∈ □_T ρ′(U′) ⟹ y′ ∈ ρ′(U′)` for all `U′ ∈ ℒ′`;
//!
//! and `⋆`-composition quantifies over the same sets.  For the relational
//! spaces the third bullet is the contrapositive of "`y′ ∈ ◆′U′` implies
//! `y ∈ ◇_T◆′U′`".

use crate::relation::Relation;
use crate::subset::Subset;

use super::morphism::RelationPair;
use super::report::{Checker, Witness};

/// A space with a family of stable left sets and a polarity map.
pub trait PairSpace {
    fn left_labels(&self) -> &[String];
    fn right_labels(&self) -> &[String];
    /// The stable sets `ℒ`, in lexicographic bit order.
    fn stable_sets(&self) -> Vec<Subset>;
    /// Membership in `ℒ`.
    fn is_stable(&self, s: &Subset) -> bool;
    /// The right-hand image `ρ(U)` of a left set.
    fn polar(&self, s: &Subset) -> Subset;
}

/// Clause identifiers and descriptions of one category's morphism clauses.
pub(crate) struct PairClauses {
    pub shape: &'static str,
    pub boxes: &'static str,
    pub boxes_text: &'static str,
    pub left: &'static str,
    pub left_text: &'static str,
    pub right: &'static str,
    pub right_text: &'static str,
}

pub(crate) fn check_shape<S: PairSpace>(
    ck: &mut Checker,
    ids: &PairClauses,
    src: &S,
    tgt: &S,
    m: &RelationPair,
) {
    let ok = m.left.left_len() == src.left_labels().len()
        && m.left.right_len() == tgt.left_labels().len()
        && m.right.left_len() == src.right_labels().len()
        && m.right.right_len() == tgt.right_labels().len();
    ck.clause(
        ids.shape,
        "the relations connect the matching carriers",
        || {
            (!ok).then(|| {
                vec![Witness::new(
                    "shape",
                    "relation sizes do not match the carriers",
                )]
            })
        },
    );
}

/// The three clauses common to all relation-pair categories.
pub(crate) fn check_pair_clauses<S: PairSpace>(
    ck: &mut Checker,
    ids: &PairClauses,
    src: &S,
    tgt: &S,
    m: &RelationPair,
) {
    let target_stable = tgt.stable_sets();
    let tl = tgt.left_labels();
    let tr = tgt.right_labels();
    let sl = src.left_labels();
    let sr = src.right_labels();
    ck.clause(ids.boxes, ids.boxes_text, || {
        for u in &target_stable {
            let boxed = m.left.boxed(u);
            if !src.is_stable(&boxed) {
                return Some(vec![
                    Witness::new("U′", u.display_with(tl)),
                    Witness::new("□U′ (not stable)", boxed.display_with(sl)),
                ]);
            }
            let lhs = src.polar(&boxed);
            let rhs = m.right.boxed(&tgt.polar(u));
            if lhs != rhs {
                return Some(vec![
                    Witness::new("U′", u.display_with(tl)),
                    Witness::new("via S", lhs.display_with(sr)),
                    Witness::new("via T", rhs.display_with(sr)),
                ]);
            }
        }
        None
    });
    ck.clause(ids.left, ids.left_text, || {
        separation_defect(&m.left, &target_stable, sl, tl)
    });
    let polars: Vec<Subset> = target_stable.iter().map(|u| tgt.polar(u)).collect();
    ck.clause(ids.right, ids.right_text, || {
        separation_defect(&m.right, &polars, sr, tr)
    });
}

/// First non-related pair `(a, b)` that no set `B` of `family` separates
/// via `a ∈ □B`, `b ∉ B`.
fn separation_defect(
    rel: &Relation,
    family: &[Subset],
    from: &[String],
    to: &[String],
) -> Option<Vec<Witness>> {
    let boxes: Vec<Subset> = family.iter().map(|b| rel.boxed(b)).collect();
    for a in 0..rel.left_len() {
        for b in 0..rel.right_len() {
            if rel.contains(a, b) {
                continue;
            }
            let separated = family
                .iter()
                .zip(&boxes)
                .any(|(set, bx)| bx.contains(a) && !set.contains(b));
            if !separated {
                return Some(vec![
                    Witness::new("from", &from[a]),
                    Witness::new("to", &to[b]),
                ]);
            }
        }
    }
    None
}

/// The relation `a ⋆ c` iff `a ∈ □_{first}□_{second} B ⟹ c ∈ B` for all
/// `B` in `family`.
pub(crate) fn star_relation(second: &Relation, first: &Relation, family: &[Subset]) -> Relation {
    let mut rows: Vec<Subset> = vec![Subset::full(second.right_len()); first.left_len()];
    for set in family {
        let bb = first.boxed(&second.boxed(set));
        for a in bb.iter() {
            rows[a].intersect_with(set);
        }
    }
    Relation::from_fn(first.left_len(), second.right_len(), |a, c| {
        rows[a].contains(c)
    })
}

/// `(S₂, T₂) ⋆ (S₁, T₁)` where `third` is the codomain of the composite.
pub fn star_pair<S: PairSpace>(
    second: &RelationPair,
    first: &RelationPair,
    third: &S,
) -> RelationPair {
    let stable = third.stable_sets();
    let polars: Vec<Subset> = stable.iter().map(|u| third.polar(u)).collect();
    RelationPair {
        left: star_relation(&second.left, &first.left, &stable),
        right: star_relation(&second.right, &first.right, &polars),
    }
}
