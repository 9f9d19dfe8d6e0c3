//! An independent brute-force re-check of validator verdicts.
//!
//! The structures are copied into plain boolean matrices and every clause
//! is re-evaluated straight from its statement: stable sets are found by
//! enumerating *all* subsets of a carrier, filters by testing closure
//! under meets computed from the order matrix, and so on.  Nothing here
//! calls the core validators or their helper routines, so agreement
//! between the two is meaningful evidence.

use latdual_core::{DualMorphism, DualSpace, Lattice, Relation};

/// Carriers above this size are not enumerated.
pub const MAX_RECHECK_CARRIER: usize = 16;

type Set = u32;

/// A relation as a boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Matrix {
    left: usize,
    right: usize,
    cells: Vec<Vec<bool>>,
}

impl Matrix {
    fn from_relation(r: &Relation) -> Self {
        Matrix {
            left: r.left_len(),
            right: r.right_len(),
            cells: (0..r.left_len())
                .map(|a| (0..r.right_len()).map(|b| r.contains(a, b)).collect())
                .collect(),
        }
    }

    fn order_of(l: &Lattice) -> Self {
        let n = l.len();
        Matrix {
            left: n,
            right: n,
            cells: (0..n)
                .map(|a| (0..n).map(|b| l.leq(a, b)).collect())
                .collect(),
        }
    }

    fn at(&self, a: usize, b: usize) -> bool {
        self.cells[a][b]
    }

    fn row(&self, a: usize) -> Set {
        (0..self.right)
            .filter(|&b| self.at(a, b))
            .fold(0, |s, b| s | 1 << b)
    }

    fn col(&self, b: usize) -> Set {
        (0..self.left)
            .filter(|&a| self.at(a, b))
            .fold(0, |s, a| s | 1 << a)
    }

    /// `{y : some x ∈ A with x R y}`.
    fn forward(&self, a: Set) -> Set {
        (0..self.left)
            .filter(|&x| has(a, x))
            .fold(0, |s, x| s | self.row(x))
    }

    /// `{x : every y with x R y lies in B}`.
    fn necessity(&self, b: Set) -> Set {
        (0..self.left)
            .filter(|&x| self.row(x) & !b == 0)
            .fold(0, |s, x| s | 1 << x)
    }

    /// `{x : x R y for some y ∈ B}`.
    fn backward(&self, b: Set) -> Set {
        (0..self.right)
            .filter(|&y| has(b, y))
            .fold(0, |s, y| s | self.col(y))
    }
}

fn has(s: Set, i: usize) -> bool {
    s & (1 << i) != 0
}

fn full(n: usize) -> Set {
    if n == 32 {
        Set::MAX
    } else {
        (1 << n) - 1
    }
}

fn subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

fn all_sets(n: usize) -> impl Iterator<Item = Set> {
    0..=full(n)
}

fn is_upset(order: &Matrix, s: Set) -> bool {
    (0..order.left).all(|a| !has(s, a) || (0..order.left).all(|b| !order.at(a, b) || has(s, b)))
}

fn is_downset(order: &Matrix, s: Set) -> bool {
    (0..order.left).all(|b| !has(s, b) || (0..order.left).all(|a| !order.at(a, b) || has(s, a)))
}

/// The greatest lower bound of `a` and `b`, found by search.
fn meet(order: &Matrix, a: usize, b: usize) -> usize {
    let n = order.left;
    (0..n)
        .filter(|&m| order.at(m, a) && order.at(m, b))
        .find(|&m| (0..n).all(|k| !(order.at(k, a) && order.at(k, b)) || order.at(k, m)))
        .expect("finite lattices have meets")
}

fn is_filter(order: &Matrix, s: Set) -> bool {
    let n = order.left;
    s != 0
        && is_upset(order, s)
        && (0..n).all(|a| (0..n).all(|b| !(has(s, a) && has(s, b)) || has(s, meet(order, a, b))))
}

/// The structure of one space, as plain matrices.
#[derive(Debug, Clone)]
enum Shape {
    Dh { x: Matrix, y: Matrix, r: Matrix },
    Gvg { x: Matrix, y: Matrix, r: Matrix },
    Hg { r: Matrix },
    Urq { first: Matrix, second: Matrix },
    Plo { r: Matrix },
    Other,
}

fn poset_matrix(p: &latdual_core::Poset) -> Matrix {
    Matrix::from_relation(p.order())
}

fn shape(space: &DualSpace) -> Shape {
    match space {
        DualSpace::Dh(d) => Shape::Dh {
            x: Matrix::order_of(d.x()),
            y: Matrix::order_of(d.y()),
            r: Matrix::from_relation(d.relation()),
        },
        DualSpace::Gvg(g) => Shape::Gvg {
            x: poset_matrix(g.x()),
            y: poset_matrix(g.y()),
            r: Matrix::from_relation(g.relation()),
        },
        DualSpace::Hg(h) => Shape::Hg {
            r: Matrix::from_relation(h.relation()),
        },
        DualSpace::Urq(u) => Shape::Urq {
            first: Matrix::from_relation(u.first_order()),
            second: Matrix::from_relation(u.second_order()),
        },
        DualSpace::Plo(p) => Shape::Plo {
            r: Matrix::from_relation(p.relation()),
        },
        _ => Shape::Other,
    }
}

impl Shape {
    fn left_len(&self) -> usize {
        match self {
            Shape::Dh { r, .. } | Shape::Gvg { r, .. } | Shape::Hg { r } | Shape::Plo { r } => {
                r.left
            }
            Shape::Urq { first, .. } => first.left,
            Shape::Other => 0,
        }
    }

    /// Membership in the stable family, straight from its definition.
    fn is_stable(&self, s: Set) -> bool {
        match self {
            Shape::Gvg { x, r, .. } => is_upset(x, s) && r.necessity(r.forward(s)) == s,
            Shape::Hg { r } | Shape::Plo { r } => r.necessity(r.forward(s)) == s,
            Shape::Urq { first, .. } => is_upset(first, s) && self.psi(self.polar(s)) == s,
            _ => false,
        }
    }

    /// `−◆U` for relational spaces, `φC = −↓₂C` for Urquhart spaces.
    fn polar(&self, s: Set) -> Set {
        match self {
            Shape::Gvg { r, .. } | Shape::Hg { r } | Shape::Plo { r } => {
                full(r.right) & !r.forward(s)
            }
            Shape::Urq { second, .. } => full(second.left) & !second.backward(s),
            _ => 0,
        }
    }

    /// `ψD = −↓₁D` (Urquhart only).
    fn psi(&self, d: Set) -> Set {
        match self {
            Shape::Urq { first, .. } => full(first.left) & !first.backward(d),
            _ => 0,
        }
    }

    fn stable_sets(&self) -> Vec<Set> {
        all_sets(self.left_len())
            .filter(|&s| self.is_stable(s))
            .collect()
    }
}

/// Whether the named clause is violated by a space; `None` when the
/// re-checker does not cover the clause or the carrier is too large.
pub fn space_clause_violated(clause: &str, space: &DualSpace) -> Option<bool> {
    let sh = shape(space);
    if sh.left_len() > MAX_RECHECK_CARRIER {
        return None;
    }
    match (&sh, clause) {
        (Shape::Dh { y, r, .. }, "dh.complement-of-image-is-filter") => {
            Some((0..r.left).any(|a| !is_filter(y, full(r.right) & !r.row(a))))
        }
        (Shape::Dh { x, r, .. }, "dh.complement-of-preimage-is-filter") => {
            Some((0..r.right).any(|b| !is_filter(x, full(r.left) & !r.col(b))))
        }
        (Shape::Dh { x, r, .. }, "dh.images-reflect-order") => Some(
            (0..r.left).any(|a| (0..r.left).any(|a2| subset(r.row(a), r.row(a2)) && !x.at(a2, a))),
        ),
        (Shape::Dh { y, r, .. }, "dh.preimages-reflect-order") => Some(
            (0..r.right)
                .any(|b| (0..r.right).any(|b2| subset(r.col(b), r.col(b2)) && !y.at(b2, b))),
        ),
        (Shape::Gvg { x, r, .. }, "gvg.left-order-matches-relation") => {
            Some((0..r.left).any(|a| (0..r.left).any(|b| x.at(a, b) != subset(r.row(b), r.row(a)))))
        }
        (Shape::Gvg { y, r, .. }, "gvg.right-order-matches-relation") => Some(
            (0..r.right).any(|a| (0..r.right).any(|b| y.at(a, b) != subset(r.col(b), r.col(a)))),
        ),
        (Shape::Gvg { x, y, r }, "gvg.image-of-upset-is-downset") => {
            Some(all_sets(r.left).any(|u| is_upset(x, u) && !is_downset(y, r.forward(u))))
        }
        (Shape::Gvg { x, y, r }, "gvg.box-of-downset-is-upset") => {
            Some(all_sets(r.right).any(|v| is_downset(y, v) && !is_upset(x, r.necessity(v))))
        }
        (Shape::Gvg { r, .. }, "gvg.separation-by-stable-upsets") => {
            let stable = sh.stable_sets();
            Some((0..r.left).any(|a| {
                (0..r.right).any(|b| {
                    !r.at(a, b) && !stable.iter().any(|&u| has(u, a) && !has(r.forward(u), b))
                })
            }))
        }
        (Shape::Gvg { x, r, .. }, "gvg.stable-upsets-determined-on-x0") => {
            let x0 = maximal_in_preimages(x, r);
            Some(all_sets(r.left).any(|u| {
                let closed = r.necessity(r.forward(u));
                is_upset(x, u) && subset(x0 & closed, u) && closed != u
            }))
        }
        (Shape::Gvg { y, r, .. }, "gvg.stable-downsets-determined-on-y0") => {
            let y0 = maximal_in_images(y, r);
            Some(all_sets(r.right).any(|v| {
                let opened = r.forward(r.necessity(v));
                is_downset(y, v) && subset(y0 & v, opened) && opened != v
            }))
        }
        _ => None,
    }
}

/// Points of `X` maximal in some `R⁻¹[y]`.
fn maximal_in_preimages(x: &Matrix, r: &Matrix) -> Set {
    (0..r.right).fold(0, |acc, b| {
        let col = r.col(b);
        acc | (0..r.left)
            .filter(|&a| {
                has(col, a) && (0..r.left).all(|a2| a2 == a || !x.at(a, a2) || !has(col, a2))
            })
            .fold(0, |s, a| s | 1 << a)
    })
}

/// Points of `Y` maximal in some `R[x]`.
fn maximal_in_images(y: &Matrix, r: &Matrix) -> Set {
    (0..r.left).fold(0, |acc, a| {
        let row = r.row(a);
        acc | (0..r.right)
            .filter(|&b| {
                has(row, b) && (0..r.right).all(|b2| b2 == b || !y.at(b, b2) || !has(row, b2))
            })
            .fold(0, |s, b| s | 1 << b)
    })
}

/// Whether the named clause is violated by a relation-pair morphism
/// `source → target`; `None` when the clause is not covered.
pub fn morphism_clause_violated(
    clause: &str,
    m: &DualMorphism,
    source: &DualSpace,
    target: &DualSpace,
) -> Option<bool> {
    let pair = match m {
        DualMorphism::Gvg(p)
        | DualMorphism::Hg(p)
        | DualMorphism::Urq(p)
        | DualMorphism::Plo(p) => p,
        _ => return None,
    };
    let (src, tgt) = (shape(source), shape(target));
    if src.left_len() > MAX_RECHECK_CARRIER || tgt.left_len() > MAX_RECHECK_CARRIER {
        return None;
    }
    let (s, t) = (
        Matrix::from_relation(&pair.left),
        Matrix::from_relation(&pair.right),
    );
    let (_, suffix) = clause.split_once('.')?;
    let target_stable = tgt.stable_sets();
    match suffix {
        "box-preserves-stable-sets" => Some(target_stable.iter().any(|&u| {
            let boxed = s.necessity(u);
            !src.is_stable(boxed) || src.polar(boxed) != t.necessity(tgt.polar(u))
        })),
        "left-relation-determined-by-stable-sets" | "first-relation-determined-by-stable-sets" => {
            Some(separation_fails(&s, &target_stable))
        }
        "right-relation-determined-by-stable-sets"
        | "second-relation-determined-by-stable-sets" => {
            let polars: Vec<Set> = target_stable.iter().map(|&u| tgt.polar(u)).collect();
            Some(separation_fails(&t, &polars))
        }
        "relation-preserved" => {
            let (r, r2) = match (&src, &tgt) {
                (Shape::Gvg { r, .. }, Shape::Gvg { r: r2, .. })
                | (Shape::Hg { r }, Shape::Hg { r: r2 }) => (r, r2),
                _ => return None,
            };
            Some((0..r.left).any(|a| {
                (0..r.right).any(|b| {
                    r.at(a, b)
                        && !(0..s.right).any(|a2| {
                            s.at(a, a2) && (0..t.right).any(|b2| t.at(b, b2) && r2.at(a2, b2))
                        })
                })
            }))
        }
        "serial-on-common-successors" => Some((0..s.left).any(|z| s.row(z) & t.row(z) == 0)),
        _ => None,
    }
}

/// Some unrelated pair `(a, b)` is not separated by a set `B` of the
/// family with `a ∈ □B` and `b ∉ B`.
fn separation_fails(rel: &Matrix, family: &[Set]) -> bool {
    (0..rel.left).any(|a| {
        (0..rel.right).any(|b| {
            !rel.at(a, b)
                && !family
                    .iter()
                    .any(|&set| has(rel.necessity(set), a) && !has(set, b))
        })
    })
}

/// Every clause the re-checker covers for this space category.
pub fn covered_space_clauses(space: &DualSpace) -> &'static [&'static str] {
    match space {
        DualSpace::Dh(_) => &[
            "dh.complement-of-image-is-filter",
            "dh.complement-of-preimage-is-filter",
            "dh.images-reflect-order",
            "dh.preimages-reflect-order",
        ],
        DualSpace::Gvg(_) => &[
            "gvg.left-order-matches-relation",
            "gvg.right-order-matches-relation",
            "gvg.image-of-upset-is-downset",
            "gvg.box-of-downset-is-upset",
            "gvg.separation-by-stable-upsets",
            "gvg.stable-upsets-determined-on-x0",
            "gvg.stable-downsets-determined-on-y0",
        ],
        _ => &[],
    }
}

/// Every clause the re-checker covers for this morphism category.
pub fn covered_morphism_clauses(m: &DualMorphism) -> &'static [&'static str] {
    match m {
        DualMorphism::Gvg(_) => &[
            "gvg-mor.box-preserves-stable-sets",
            "gvg-mor.left-relation-determined-by-stable-sets",
            "gvg-mor.right-relation-determined-by-stable-sets",
            "gvg-mor.relation-preserved",
        ],
        DualMorphism::Hg(_) => &[
            "hg-mor.box-preserves-stable-sets",
            "hg-mor.left-relation-determined-by-stable-sets",
            "hg-mor.right-relation-determined-by-stable-sets",
            "hg-mor.relation-preserved",
        ],
        DualMorphism::Urq(_) => &[
            "urq-mor.box-preserves-stable-sets",
            "urq-mor.first-relation-determined-by-stable-sets",
            "urq-mor.second-relation-determined-by-stable-sets",
            "urq-mor.serial-on-common-successors",
        ],
        DualMorphism::Plo(_) => &[
            "plo-mor.box-preserves-stable-sets",
            "plo-mor.first-relation-determined-by-stable-sets",
            "plo-mor.second-relation-determined-by-stable-sets",
            "plo-mor.serial-on-common-successors",
        ],
        _ => &[],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use latdual_core::fixtures;
    use latdual_core::functors::Duals;

    #[test]
    fn constructed_spaces_violate_nothing() {
        for a in [
            fixtures::chain(3),
            fixtures::diamond(3),
            fixtures::boolean_square(),
            fixtures::pentagon(),
        ] {
            let duals = Duals::of(&a).unwrap();
            for space in
                [latdual_core::Category::Dh, latdual_core::Category::Gvg].map(|c| duals.space(c))
            {
                for clause in covered_space_clauses(&space) {
                    assert_eq!(
                        space_clause_violated(clause, &space),
                        Some(false),
                        "{clause} on {}",
                        a.name()
                    );
                }
            }
        }
    }

    #[test]
    fn identities_violate_nothing() {
        let duals = Duals::of(&fixtures::diamond(3)).unwrap();
        for c in [
            latdual_core::Category::Gvg,
            latdual_core::Category::Hg,
            latdual_core::Category::Urq,
            latdual_core::Category::Plo,
        ] {
            let space = duals.space(c);
            let id = space.identity();
            for clause in covered_morphism_clauses(&id) {
                assert_eq!(
                    morphism_clause_violated(clause, &id, &space, &space),
                    Some(false),
                    "{clause}"
                );
            }
        }
    }

    #[test]
    fn a_toggled_dh_pair_is_confirmed() {
        let duals = Duals::of(&fixtures::boolean_square()).unwrap();
        let latdual_core::DualSpace::Dh(d) = duals.space(latdual_core::Category::Dh) else {
            unreachable!()
        };
        let mut r = d.relation().clone();
        r.toggle(0, 0);
        let mutant = DualSpace::Dh(d.with_relation(r).unwrap());
        let clause = mutant.validate().violated_clause().unwrap();
        assert_eq!(space_clause_violated(clause, &mutant), Some(true));
    }

    #[test]
    fn unknown_clauses_are_not_covered() {
        let space = DualSpace::Dh(latdual_core::functors::dh_of(&fixtures::chain(2)));
        assert_eq!(
            space_clause_violated("dh.relation-is-interior", &space),
            None
        );
    }
}
