//! Gehrke–van Gool spaces: two posets and a relation determining both
//! orders, whose stable upsets carry the dual lattice.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::relation::Relation;
use crate::subset::Subset;

use super::morphism::RelationPair;
use super::polarity::{check_pair_clauses, check_shape, PairClauses, PairSpace};
use super::report::{Checker, ValidationReport, Witness};
use super::stable::{intersection_closure, FamilyOrder, StableFamily};

/// Carriers above this size skip the clauses that quantify over all
/// upsets (resp. downsets).
pub const UPSET_ENUMERATION_GUARD: usize = 18;

/// A finite GvG-space `(X, R, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvgSpace {
    x: Poset,
    y: Poset,
    relation: Relation,
}

impl GvgSpace {
    pub fn new(x: Poset, y: Poset, relation: Relation) -> Result<Self> {
        if relation.left_len() != x.len() || relation.right_len() != y.len() {
            return Err(Error::SideMismatch {
                expected: x.len() * y.len(),
                found: relation.left_len() * relation.right_len(),
            });
        }
        Ok(GvgSpace { x, y, relation })
    }

    pub fn x(&self) -> &Poset {
        &self.x
    }

    pub fn y(&self) -> &Poset {
        &self.y
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn with_relation(&self, relation: Relation) -> Result<Self> {
        GvgSpace::new(self.x.clone(), self.y.clone(), relation)
    }

    pub fn x0_y0(&self) -> (Subset, Subset) {
        super::x0_y0(&self.x, &self.relation, &self.y)
    }

    /// `ℒ𝒢` ordered by inclusion.
    pub fn stable_family(&self) -> Result<StableFamily> {
        StableFamily::new(
            "LG",
            self.x.labels(),
            self.stable_sets(),
            FamilyOrder::Inclusion,
        )
    }

    /// The identity morphism `(≤_X, ≤_Y)`.
    pub fn identity(&self) -> RelationPair {
        RelationPair {
            left: self.x.order().clone(),
            right: self.y.order().clone(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let (x, y, r) = (&self.x, &self.y, &self.relation);
        let (xl, yl) = (x.labels(), y.labels());
        let mut ck = Checker::new("GvG-space");
        ck.clause(
            "gvg.left-order-matches-relation",
            "x ≤ x′ iff R[x′] ⊆ R[x]",
            || {
                order_mismatch(
                    x.len(),
                    |a, b| x.leq(a, b),
                    |a, b| r.row(b).is_subset(r.row(a)),
                )
                .map(|(a, b)| vec![Witness::new("x", &xl[a]), Witness::new("x′", &xl[b])])
            },
        );
        ck.clause(
            "gvg.right-order-matches-relation",
            "y ≤ y′ iff R⁻¹[y′] ⊆ R⁻¹[y]",
            || {
                order_mismatch(
                    y.len(),
                    |a, b| y.leq(a, b),
                    |a, b| r.col(b).is_subset(r.col(a)),
                )
                .map(|(a, b)| vec![Witness::new("y", &yl[a]), Witness::new("y′", &yl[b])])
            },
        );
        // ◆ preserves unions and every upset is a union of principal
        // upsets, so checking ◆↑x for every x covers all upsets.
        ck.clause(
            "gvg.image-of-upset-is-downset",
            "◆U is a downset for every upset U",
            || {
                (0..x.len())
                    .find(|&a| !y.is_downset(&r.black_diamond(x.up(a))))
                    .map(|a| vec![Witness::new("U", x.up(a).display_with(xl))])
            },
        );
        // □ preserves intersections and every downset is an intersection of
        // sets −↑y (the empty intersection being Y).
        ck.clause(
            "gvg.box-of-downset-is-upset",
            "□V is an upset for every downset V",
            || {
                let full = Subset::full(y.len());
                std::iter::once(full)
                    .chain((0..y.len()).map(|b| y.up(b).complement()))
                    .find(|v| !x.is_upset(&r.boxed(v)))
                    .map(|v| vec![Witness::new("V", v.display_with(yl))])
            },
        );
        let stable = self.stable_sets();
        ck.clause(
            "gvg.separation-by-stable-upsets",
            "x not R y implies some stable upset U with x ∈ U and y ∉ ◆U",
            || {
                separation_by_stable(r, &stable)
                    .map(|(a, b)| vec![Witness::new("x", &xl[a]), Witness::new("y", &yl[b])])
            },
        );
        let (x0, y0) = self.x0_y0();
        if x.len() > UPSET_ENUMERATION_GUARD {
            ck.skipped(
                "gvg.stable-upsets-determined-on-x0",
                "X₀ ∩ □◆U ⊆ U implies U = □◆U",
                format!("{} points exceed the upset enumeration guard", x.len()),
            );
        } else {
            ck.clause(
                "gvg.stable-upsets-determined-on-x0",
                "X₀ ∩ □◆U ⊆ U implies U = □◆U",
                || {
                    x.upsets()
                        .into_iter()
                        .find(|u| {
                            let closed = r.boxed(&r.black_diamond(u));
                            x0.intersection(&closed).is_subset(u) && closed != *u
                        })
                        .map(|u| vec![Witness::new("U", u.display_with(xl))])
                },
            );
        }
        if y.len() > UPSET_ENUMERATION_GUARD {
            ck.skipped(
                "gvg.stable-downsets-determined-on-y0",
                "Y₀ ∩ V ⊆ ◆□V implies V = ◆□V",
                format!("{} points exceed the upset enumeration guard", y.len()),
            );
        } else {
            ck.clause(
                "gvg.stable-downsets-determined-on-y0",
                "Y₀ ∩ V ⊆ ◆□V implies V = ◆□V",
                || {
                    y.downsets()
                        .into_iter()
                        .find(|v| {
                            let opened = r.black_diamond(&r.boxed(v));
                            y0.intersection(v).is_subset(&opened) && opened != *v
                        })
                        .map(|v| vec![Witness::new("V", v.display_with(yl))])
                },
            );
        }
        ck.finish()
    }
}

impl PairSpace for GvgSpace {
    fn left_labels(&self) -> &[String] {
        self.x.labels()
    }

    fn right_labels(&self) -> &[String] {
        self.y.labels()
    }

    /// Stable sets are the intersections of the sets `X − R⁻¹[y]` that are
    /// upsets.
    fn stable_sets(&self) -> Vec<Subset> {
        let r = &self.relation;
        let generators: Vec<Subset> = (0..r.right_len()).map(|b| r.col(b).complement()).collect();
        intersection_closure(r.left_len(), &generators)
            .into_iter()
            .filter(|u| self.x.is_upset(u))
            .collect()
    }

    fn is_stable(&self, s: &Subset) -> bool {
        self.x.is_upset(s) && self.relation.boxed(&self.relation.black_diamond(s)) == *s
    }

    fn polar(&self, s: &Subset) -> Subset {
        self.relation.black_diamond(s).complement()
    }
}

/// First pair `(a, b)` on which the two orders disagree.
pub(crate) fn order_mismatch(
    n: usize,
    given: impl Fn(usize, usize) -> bool,
    derived: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| given(a, b) != derived(a, b))
}

/// First pair `x not R y` with no stable `U` such that `x ∈ U`, `y ∉ ◆U`.
pub(crate) fn separation_by_stable(r: &Relation, stable: &[Subset]) -> Option<(usize, usize)> {
    let images: Vec<Subset> = stable.iter().map(|u| r.black_diamond(u)).collect();
    for a in 0..r.left_len() {
        for b in 0..r.right_len() {
            if r.contains(a, b) {
                continue;
            }
            if !stable
                .iter()
                .zip(&images)
                .any(|(u, img)| u.contains(a) && !img.contains(b))
            {
                return Some((a, b));
            }
        }
    }
    None
}

/// First `x R y` with no `x S x′`, `y T y′`, `x′ R′ y′`.
pub(crate) fn relation_preserved_defect(
    r: &Relation,
    m: &RelationPair,
    r2: &Relation,
) -> Option<(usize, usize)> {
    r.pairs().into_iter().find(|&(a, b)| {
        let targets = m.right.row(b);
        !m.left
            .row(a)
            .iter()
            .any(|a2| r2.row(a2).intersects(targets))
    })
}

const CLAUSES: PairClauses = PairClauses {
    shape: "gvg-mor.relations-have-matching-carriers",
    boxes: "gvg-mor.box-preserves-stable-sets",
    boxes_text: "□_S U′ is stable and ◆□_S U′ = ◇_T ◆′U′",
    left: "gvg-mor.left-relation-determined-by-stable-sets",
    left_text: "x not S x′ implies some U′ with x ∈ □_S U′ and x′ ∉ U′",
    right: "gvg-mor.right-relation-determined-by-stable-sets",
    right_text: "y not T y′ implies some U′ with y ∉ ◇_T ◆′U′ and y′ ∈ ◆′U′",
};

/// Check a GvG-morphism `(S, T): source → target`.
pub fn validate_morphism(
    source: &GvgSpace,
    target: &GvgSpace,
    m: &RelationPair,
) -> ValidationReport {
    let mut ck = Checker::new("GvG-morphism");
    check_shape(&mut ck, &CLAUSES, source, target, m);
    if ck.has_failed() {
        return ck.finish();
    }
    check_pair_clauses(&mut ck, &CLAUSES, source, target, m);
    ck.clause(
        "gvg-mor.relation-preserved",
        "x R y implies some x S x′, y T y′ with x′ R′ y′",
        || {
            relation_preserved_defect(&source.relation, m, &target.relation).map(|(a, b)| {
                vec![
                    Witness::new("x", source.x.label(a)),
                    Witness::new("y", source.y.label(b)),
                ]
            })
        },
    );
    ck.finish()
}
