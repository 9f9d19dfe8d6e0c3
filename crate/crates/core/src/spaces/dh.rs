//! Dunn–Hartonas spaces: two finite lattices and a relation between them
//! whose complements are filters and which determines both orders.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::relation::Relation;
use crate::subset::Subset;

use super::morphism::{coherent_map_defect, DhMorphism};
use super::report::{Checker, ValidationReport, Witness};
use super::stable::{FamilyOrder, StableFamily};

/// A finite DH-space `(X, R, Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhSpace {
    x: Lattice,
    y: Lattice,
    relation: Relation,
}

impl DhSpace {
    /// Structural constructor: checks only that `relation ⊆ X × Y`.
    pub fn new(x: Lattice, y: Lattice, relation: Relation) -> Result<Self> {
        if relation.left_len() != x.len() {
            return Err(Error::SideMismatch {
                expected: x.len(),
                found: relation.left_len(),
            });
        }
        if relation.right_len() != y.len() {
            return Err(Error::SideMismatch {
                expected: y.len(),
                found: relation.right_len(),
            });
        }
        Ok(DhSpace { x, y, relation })
    }

    pub fn x(&self) -> &Lattice {
        &self.x
    }

    pub fn y(&self) -> &Lattice {
        &self.y
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    /// The same carriers with another relation.
    pub fn with_relation(&self, relation: Relation) -> Result<Self> {
        DhSpace::new(self.x.clone(), self.y.clone(), relation)
    }

    /// `(X₀, Y₀)`: points maximal in some `R⁻¹[y]` (resp. `R[x]`).
    pub fn x0_y0(&self) -> (Subset, Subset) {
        super::x0_y0(self.x.poset(), &self.relation, self.y.poset())
    }

    /// `CLF(X) = {↑k : k ∈ X}` ordered by inclusion; member labels are
    /// `↑` followed by the generator's label.
    pub fn clf(&self) -> Result<StableFamily> {
        let members = (0..self.x.len())
            .map(|k| self.x.principal_filter(k))
            .collect();
        let x = &self.x;
        StableFamily::with_labels(
            format!("CLF({})", x.name()),
            x.len(),
            members,
            FamilyOrder::Inclusion,
            |s| format!("↑{}", x.label(x.meet_all(s.iter()))),
        )
    }

    /// Check the DH-relation axioms in definition order.
    pub fn validate(&self) -> ValidationReport {
        let (x, y, r) = (&self.x, &self.y, &self.relation);
        let mut ck = Checker::new(format!("DH-space over {} and {}", x.name(), y.name()));
        ck.vacuous("dh.relation-is-interior", "R is an interior relation");
        ck.clause(
            "dh.complement-of-image-is-filter",
            "−R[x] is a filter of Y for every x",
            || {
                (0..x.len())
                    .find(|&p| !y.is_filter(&r.row(p).complement()))
                    .map(|p| vec![Witness::new("x", x.label(p))])
            },
        );
        ck.clause(
            "dh.complement-of-preimage-is-filter",
            "−R⁻¹[y] is a filter of X for every y",
            || {
                (0..y.len())
                    .find(|&q| !x.is_filter(&r.col(q).complement()))
                    .map(|q| vec![Witness::new("y", y.label(q))])
            },
        );
        ck.clause(
            "dh.images-reflect-order",
            "R[x] ⊆ R[x′] implies x′ ≤ x",
            || {
                pairs(x.len())
                    .find(|&(p, p2)| r.row(p).is_subset(r.row(p2)) && !x.leq(p2, p))
                    .map(|(p, p2)| {
                        vec![
                            Witness::new("x", x.label(p)),
                            Witness::new("x′", x.label(p2)),
                        ]
                    })
            },
        );
        ck.clause(
            "dh.preimages-reflect-order",
            "R⁻¹[y] ⊆ R⁻¹[y′] implies y′ ≤ y",
            || {
                pairs(y.len())
                    .find(|&(q, q2)| r.col(q).is_subset(r.col(q2)) && !y.leq(q2, q))
                    .map(|(q, q2)| {
                        vec![
                            Witness::new("y", y.label(q)),
                            Witness::new("y′", y.label(q2)),
                        ]
                    })
            },
        );
        ck.finish()
    }

    /// The identity morphism `(1_X, 1_Y)`.
    pub fn identity(&self) -> DhMorphism {
        DhMorphism {
            x_map: (0..self.x.len()).collect(),
            y_map: (0..self.y.len()).collect(),
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// Check a DH-morphism `(f, g): source → target`.
pub fn validate_morphism(source: &DhSpace, target: &DhSpace, m: &DhMorphism) -> ValidationReport {
    let mut ck = Checker::new(format!(
        "DH-morphism {} → {}",
        source.x.name(),
        target.x.name()
    ));
    let shape_ok = m.x_map.len() == source.x.len()
        && m.y_map.len() == source.y.len()
        && m.x_map.iter().all(|&v| v < target.x.len())
        && m.y_map.iter().all(|&v| v < target.y.len());
    ck.clause(
        "dh-mor.maps-have-matching-carriers",
        "f: X₁ → X₂ and g: Y₁ → Y₂",
        || {
            (!shape_ok).then(|| {
                vec![Witness::new(
                    "shape",
                    "map tables do not match the carriers",
                )]
            })
        },
    );
    if ck.has_failed() {
        return ck.finish();
    }
    let (f, g) = (&m.x_map, &m.y_map);
    let (x1, y1, r1) = (&source.x, &source.y, &source.relation);
    let (x2, y2, r2) = (&target.x, &target.y, &target.relation);
    ck.clause(
        "dh-mor.left-map-is-coherent",
        "f preserves meets and the top, and its lower adjoint preserves finite meets",
        || coherent_map_defect(x1, x2, f),
    );
    ck.clause(
        "dh-mor.right-map-is-coherent",
        "g preserves meets and the top, and its lower adjoint preserves finite meets",
        || coherent_map_defect(y1, y2, g),
    );
    ck.clause(
        "dh-mor.relation-preserved",
        "x R₁ y implies f(x) R₂ g(y)",
        || {
            r1.pairs()
                .into_iter()
                .find(|&(p, q)| !r2.contains(f[p], g[q]))
                .map(|(p, q)| {
                    vec![
                        Witness::new("x", x1.label(p)),
                        Witness::new("y", y1.label(q)),
                    ]
                })
        },
    );
    ck.clause(
        "dh-mor.left-back-condition",
        "x′ R₂ g(y) implies some x R₁ y with x′ ≤ f(x)",
        || {
            for q in 0..y1.len() {
                for p2 in r2.col(g[q]).iter() {
                    if !r1.col(q).iter().any(|p| x2.leq(p2, f[p])) {
                        return Some(vec![
                            Witness::new("x′", x2.label(p2)),
                            Witness::new("y", y1.label(q)),
                        ]);
                    }
                }
            }
            None
        },
    );
    ck.clause(
        "dh-mor.right-back-condition",
        "f(x) R₂ y′ implies some x R₁ y with y′ ≤ g(y)",
        || {
            for p in 0..x1.len() {
                for q2 in r2.row(f[p]).iter() {
                    if !r1.row(p).iter().any(|q| y2.leq(q2, g[q])) {
                        return Some(vec![
                            Witness::new("x", x1.label(p)),
                            Witness::new("y′", y2.label(q2)),
                        ]);
                    }
                }
            }
            None
        },
    );
    ck.finish()
}

/// `(f₂, g₂) ∘ (f₁, g₁)`.
pub fn compose(second: &DhMorphism, first: &DhMorphism) -> DhMorphism {
    DhMorphism {
        x_map: first.x_map.iter().map(|&p| second.x_map[p]).collect(),
        y_map: first.y_map.iter().map(|&q| second.y_map[q]).collect(),
    }
}
