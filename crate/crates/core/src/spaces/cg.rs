//! Celani–González spaces: a finite set with a fixed subbasis `𝒦` whose
//! complements `ℒ𝒞` carry the dual lattice.

use crate::error::Result;
use crate::relation::Relation;
use crate::subset::Subset;

use super::morphism::CgMorphism;
use super::polarity::star_relation;
use super::report::{Checker, ValidationReport, Witness};
use super::stable::{FamilyOrder, StableFamily};

/// Default carrier bound for the family condition, which enumerates
/// families of closed sets.
pub const FAMILY_CONDITION_GUARD: usize = 12;

/// At most this many candidate closed sets are combined into families.
const FAMILY_CANDIDATE_LIMIT: usize = 20;

/// A finite CG-space `(X, 𝒦)`; the subbasis is stored sorted and without
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgSpace {
    labels: Vec<String>,
    subbasis: Vec<Subset>,
}

impl CgSpace {
    pub fn new(labels: Vec<String>, mut subbasis: Vec<Subset>) -> Result<Self> {
        for u in &subbasis {
            u.check_carrier(labels.len())?;
        }
        subbasis.sort();
        subbasis.dedup();
        Ok(CgSpace { labels, subbasis })
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

    pub fn subbasis(&self) -> &[Subset] {
        &self.subbasis
    }

    /// `ℒ𝒞 = {−U : U ∈ 𝒦}`, sorted.
    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self.subbasis.iter().map(Subset::complement).collect();
        out.sort();
        out
    }

    /// `ℒ𝒞` ordered by inclusion.
    pub fn closed_family(&self) -> Result<StableFamily> {
        StableFamily::new(
            "LC",
            &self.labels,
            self.closed_sets(),
            FamilyOrder::Inclusion,
        )
    }

    /// `Δ(S) = ⋂{A ∈ ℒ𝒞 : S ⊆ A}` (the whole carrier when no member
    /// contains `S`).
    pub fn delta_closure(&self, s: &Subset) -> Subset {
        let mut out = Subset::full(self.len());
        for a in self.closed_sets() {
            if s.is_subset(&a) {
                out.intersect_with(&a);
            }
        }
        out
    }

    pub fn is_delta_closed(&self, s: &Subset) -> bool {
        self.delta_closure(s) == *s
    }

    /// The identity morphism: the dual of the specialization order,
    /// `x ≤ z` iff every `U ∈ 𝒦` containing `z` contains `x`.
    pub fn identity(&self) -> CgMorphism {
        let n = self.len();
        CgMorphism {
            relation: Relation::from_fn(n, n, |x, z| {
                self.subbasis
                    .iter()
                    .all(|u| !u.contains(z) || u.contains(x))
            }),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        self.validate_with_guard(FAMILY_CONDITION_GUARD)
    }

    /// Validate, skipping the family condition above `guard` points.
    pub fn validate_with_guard(&self, guard: usize) -> ValidationReport {
        let n = self.len();
        let l = &self.labels;
        let k = &self.subbasis;
        let mut ck = Checker::new("CG-space");
        ck.clause("cg.t0-and-covered", "X is T₀ and X = ⋃𝒦", || {
            let mut cover = Subset::empty(n);
            for u in k {
                cover.union_with(u);
            }
            if let Some(x) = cover.complement().first() {
                return Some(vec![Witness::new("uncovered point", &l[x])]);
            }
            (0..n)
                .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
                .find(|&(a, b)| k.iter().all(|u| u.contains(a) == u.contains(b)))
                .map(|(a, b)| vec![Witness::new("x", &l[a]), Witness::new("y", &l[b])])
        });
        ck.vacuous("cg.subbasis-compact-open", "each U ∈ 𝒦 is compact open");
        ck.clause(
            "cg.subbasis-closed-under-unions",
            "∅ ∈ 𝒦 and 𝒦 is closed under binary unions",
            || {
                if !k.contains(&Subset::empty(n)) {
                    return Some(vec![Witness::new("missing", "∅")]);
                }
                for u in k {
                    for v in k {
                        if k.binary_search(&u.union(v)).is_err() {
                            return Some(vec![
                                Witness::new("U", u.display_with(l)),
                                Witness::new("V", v.display_with(l)),
                            ]);
                        }
                    }
                }
                None
            },
        );
        ck.clause(
            "cg.intersection-condition",
            "x ∈ U ∩ V implies some W, D ∈ 𝒦 with x ∈ D − W and D ⊆ (U ∩ V) ∪ W",
            || {
                for u in k {
                    for v in k {
                        let uv = u.intersection(v);
                        for x in uv.iter() {
                            let found = k.iter().any(|w| {
                                !w.contains(x)
                                    && k.iter().any(|d| d.contains(x) && d.is_subset(&uv.union(w)))
                            });
                            if !found {
                                return Some(vec![
                                    Witness::new("U", u.display_with(l)),
                                    Witness::new("V", v.display_with(l)),
                                    Witness::new("x", &l[x]),
                                ]);
                            }
                        }
                    }
                }
                None
            },
        );
        let family_text =
            "a Y-family avoiding Δ-closed Y pointwise has a common point outside it in Y";
        if n > guard {
            ck.skipped(
                "cg.family-condition",
                family_text,
                format!("{n} points exceed the family-condition guard of {guard}"),
            );
        } else {
            match self.family_condition_defect() {
                Ok(defect) => ck.clause("cg.family-condition", family_text, || defect),
                Err(why) => ck.skipped("cg.family-condition", family_text, why),
            }
        }
        ck.clause("cg.carrier-in-subbasis", "X ∈ 𝒦", || {
            k.binary_search(&Subset::full(n))
                .is_err()
                .then(|| vec![Witness::new("missing", "X")])
        });
        ck.clause(
            "cg.meets-exist-in-subbasis",
            "⋃{W ∈ 𝒦 : W ⊆ U ∩ V} ∈ 𝒦",
            || {
                for u in k {
                    for v in k {
                        let uv = u.intersection(v);
                        let mut join = Subset::empty(n);
                        for w in k.iter().filter(|w| w.is_subset(&uv)) {
                            join.union_with(w);
                        }
                        if k.binary_search(&join).is_err() {
                            return Some(vec![
                                Witness::new("U", u.display_with(l)),
                                Witness::new("V", v.display_with(l)),
                            ]);
                        }
                    }
                }
                None
            },
        );
        ck.finish()
    }

    /// For every `Δ`-closed `Y` and every nonempty `Y`-family `𝒵` of closed
    /// sets with `Y − A ≠ ∅` for all `A ∈ 𝒵`, require
    /// `Y ∩ ⋂{−A : A ∈ 𝒵} ≠ ∅`.  `Err` when too many candidates exist.
    fn family_condition_defect(&self) -> std::result::Result<Option<Vec<Witness>>, String> {
        let l = &self.labels;
        let closed = self.closed_sets();
        // Δ-closed sets are exactly the intersections of members of ℒ𝒞,
        // which is closed under intersections when 𝒦 is closed under unions.
        let delta_closed: Vec<Subset> = super::stable::intersection_closure(self.len(), &closed);
        for y in &delta_closed {
            let candidates: Vec<&Subset> = closed.iter().filter(|a| !y.is_subset(a)).collect();
            if candidates.len() > FAMILY_CANDIDATE_LIMIT {
                return Err(format!(
                    "{} candidate closed sets exceed the limit",
                    candidates.len()
                ));
            }
            let above_y: Vec<&Subset> = closed.iter().filter(|h| y.is_subset(h)).collect();
            for mask in 1u32..(1u32 << candidates.len()) {
                let family: Vec<&Subset> = (0..candidates.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| candidates[i])
                    .collect();
                let is_y_family = family.iter().all(|a| {
                    family.iter().all(|b| {
                        above_y.iter().any(|h| {
                            let (ah, bh) = (a.intersection(h), b.intersection(h));
                            family.iter().any(|c| ah.is_subset(c) && bh.is_subset(c))
                        })
                    })
                });
                if !is_y_family {
                    continue;
                }
                let mut rest = y.clone();
                for a in &family {
                    rest = rest.difference(a);
                }
                if rest.is_empty() {
                    let names: Vec<String> = family.iter().map(|a| a.display_with(l)).collect();
                    return Ok(Some(vec![
                        Witness::new("Y", y.display_with(l)),
                        Witness::new("family", names.join(" ")),
                    ]));
                }
            }
        }
        Ok(None)
    }
}

/// Check a CG-morphism `S: source → target`.
pub fn validate_morphism(source: &CgSpace, target: &CgSpace, m: &CgMorphism) -> ValidationReport {
    let s = &m.relation;
    let mut ck = Checker::new("CG-morphism");
    ck.clause(
        "cg-mor.relation-has-matching-carriers",
        "S ⊆ X₁ × X₂",
        || {
            (s.left_len() != source.len() || s.right_len() != target.len()).then(|| {
                vec![Witness::new(
                    "shape",
                    "relation size does not match the carriers",
                )]
            })
        },
    );
    if ck.has_failed() {
        return ck.finish();
    }
    let (l1, l2) = (&source.labels, &target.labels);
    let closed1 = source.closed_sets();
    let closed2 = target.closed_sets();
    ck.clause(
        "cg-mor.box-preserves-closed-sets",
        "B ∈ ℒ𝒞₂ implies □_S B ∈ ℒ𝒞₁",
        || {
            closed2
                .iter()
                .find(|b| closed1.binary_search(&s.boxed(b)).is_err())
                .map(|b| vec![Witness::new("B", b.display_with(l2))])
        },
    );
    ck.clause(
        "cg-mor.successor-sets-closed",
        "S[x] is Δ₂-closed for every x",
        || {
            (0..source.len())
                .find(|&x| !target.is_delta_closed(s.row(x)))
                .map(|x| vec![Witness::new("x", &l1[x])])
        },
    );
    ck.clause("cg-mor.serial", "S[x] ≠ ∅ for every x", || {
        (0..source.len())
            .find(|&x| s.row(x).is_empty())
            .map(|x| vec![Witness::new("x", &l1[x])])
    });
    ck.clause(
        "cg-mor.box-preserves-joins",
        "□_S Δ₂(B₁ ∪ B₂) ⊆ Δ₁(□_S B₁ ∪ □_S B₂)",
        || {
            for b1 in &closed2 {
                for b2 in &closed2 {
                    let lhs = s.boxed(&target.delta_closure(&b1.union(b2)));
                    let rhs = source.delta_closure(&s.boxed(b1).union(&s.boxed(b2)));
                    if !lhs.is_subset(&rhs) {
                        return Some(vec![
                            Witness::new("B₁", b1.display_with(l2)),
                            Witness::new("B₂", b2.display_with(l2)),
                        ]);
                    }
                }
            }
            None
        },
    );
    ck.finish()
}

/// `S₂ ⋆ S₁`: `x ⋆ z` iff `x ∈ □_{S₁}□_{S₂}B ⟹ z ∈ B` for all `B ∈ ℒ𝒞₃`.
pub fn star(second: &CgMorphism, first: &CgMorphism, third: &CgSpace) -> CgMorphism {
    CgMorphism {
        relation: star_relation(&second.relation, &first.relation, &third.closed_sets()),
    }
}
