//! Finite bounded lattices: construction, filters and ideals, distributivity
//! notions, d-prime and meet-irreducible elements.
//!
//! Every filter of a finite lattice is principal, so [`Lattice::filt`]
//! indexes the filter lattice by generators: element `i` of `filt(A)` is the
//! filter `↑i`.  The same holds for ideals in [`Lattice::idl`].

use std::collections::HashMap;

use crate::error::{Bound, Error, LatticeDefect, Result};
use crate::poset::Poset;
use crate::relation::Relation;
use crate::subset::Subset;

/// How [`Lattice::d_prime`] quantifies over distributive meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DPrimeMode {
    /// Every nonempty finite family (all subsets of the lattice).  This is
    /// the definition proper.
    #[default]
    Exact,
    /// Only families of at most two elements (plus the empty meet).  Kept for
    /// cross-validation: it over-approximates the d-prime set on lattices
    /// such as `Filt(M_n)`, `n ≥ 3`, where a distributive meet of three or
    /// more elements has no distributive binary sub-meet.
    Binary,
}

/// A finite bounded lattice with precomputed meet and join tables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    name: String,
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Build from a partial order, computing the meet/join tables.
    ///
    /// Fails with [`Error::NoBound`] when a bound is missing and with
    /// [`Error::NotALattice`] for the first pair (in index order) lacking a
    /// unique glb or lub.
    pub fn from_poset(name: impl Into<String>, poset: Poset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::NoBound(Bound::Bottom));
        }
        let all = Subset::full(n);
        let bottom = (0..n)
            .find(|&x| poset.up(x) == &all)
            .ok_or(Error::NoBound(Bound::Bottom))?;
        let top = (0..n)
            .find(|&x| poset.down(x) == &all)
            .ok_or(Error::NoBound(Bound::Top))?;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let lower = poset.down(x).intersection(poset.down(y));
                let glb = lower.iter().find(|&m| lower.is_subset(poset.down(m)));
                let upper = poset.up(x).intersection(poset.up(y));
                let lub = upper.iter().find(|&j| upper.is_subset(poset.up(j)));
                let defect = |defect| Error::NotALattice {
                    left: poset.label(x).to_string(),
                    right: poset.label(y).to_string(),
                    defect,
                };
                let glb = glb.ok_or_else(|| defect(LatticeDefect::NoMeet))?;
                let lub = lub.ok_or_else(|| defect(LatticeDefect::NoJoin))?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }
        Ok(Lattice {
            name: name.into(),
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Build from element names and cover pairs `(lower, upper)`.
    ///
    /// The order is the reflexive-transitive closure of the covers.
    pub fn from_covers<S: AsRef<str>>(
        name: impl Into<String>,
        elements: &[S],
        covers: &[(S, S)],
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_ref().to_string(), i).is_some() {
                return Err(Error::BadElementName(e.as_ref().to_string()));
            }
        }
        let n = elements.len();
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::BadElementName(s.as_ref().to_string()))
        };
        let mut edges = Relation::empty(n, n);
        for (lo, hi) in covers {
            edges.insert(lookup(lo)?, lookup(hi)?);
        }
        let labels: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        if let Some(v) = find_cycle(&edges) {
            return Err(Error::CycleDetected(labels[v].clone()));
        }
        let order = reflexive_transitive_closure(&edges);
        let poset = Poset::new(order, labels)?;
        let lattice = Self::from_poset(name, poset)?;
        Ok(lattice)
    }

    /// Build from an order predicate on `0..n` (used by enumeration and by
    /// stable families).
    pub fn from_leq(
        name: impl Into<String>,
        labels: Vec<String>,
        leq: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let n = labels.len();
        let poset = Poset::new(Relation::from_fn(n, n, leq), labels)?;
        Self::from_poset(name, poset)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Replace element labels (same order, same count).
    pub fn with_labels(self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        let poset = Poset::new_unchecked(self.poset.order().clone(), labels);
        Lattice { poset, ..self }
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    /// Meet of a finite family; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a finite family; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Hasse diagram edges.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    /// The order dual, with the same labels.
    pub fn dual(&self) -> Lattice {
        Lattice {
            name: format!("{}^op", self.name),
            poset: self.poset.dual(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// `↑x` as a subset.
    pub fn principal_filter(&self, x: usize) -> Subset {
        self.poset.up(x).clone()
    }

    /// `↓x` as a subset.
    pub fn principal_ideal(&self, x: usize) -> Subset {
        self.poset.down(x).clone()
    }

    /// Whether `s` is a filter (nonempty, upward closed, meet closed).
    pub fn is_filter(&self, s: &Subset) -> bool {
        !s.is_empty()
            && self.poset.is_upset(s)
            && s.iter()
                .all(|x| s.iter().all(|y| s.contains(self.meet(x, y))))
    }

    /// Whether `s` is an ideal (nonempty, downward closed, join closed).
    pub fn is_ideal(&self, s: &Subset) -> bool {
        !s.is_empty()
            && self.poset.is_downset(s)
            && s.iter()
                .all(|x| s.iter().all(|y| s.contains(self.join(x, y))))
    }

    /// The generator of a filter given as a subset, if it is one.
    pub fn filter_generator(&self, s: &Subset) -> Option<usize> {
        if !self.is_filter(s) {
            return None;
        }
        let g = self.meet_all(s.iter());
        (self.principal_filter(g) == *s).then_some(g)
    }

    /// The lattice of filters ordered by inclusion; element `i` is `↑i`.
    ///
    /// `↑i ⊆ ↑j ⟺ j ≤ i`, so the result is the order dual of `self` with
    /// labels `↑x`.
    pub fn filt(&self) -> Lattice {
        let labels = self.labels().iter().map(|l| format!("↑{l}")).collect();
        self.dual()
            .with_labels(labels)
            .with_name(format!("Filt({})", self.name))
    }

    /// The lattice of ideals ordered by inclusion; element `i` is `↓i`.
    pub fn idl(&self) -> Lattice {
        let labels = self.labels().iter().map(|l| format!("↓{l}")).collect();
        self.clone()
            .with_labels(labels)
            .with_name(format!("Idl({})", self.name))
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// Whether the meet of the nonempty family `m` is distributive:
    /// `a ∨ ⋀M = ⋀{a ∨ m : m ∈ M}` for every `a`.
    pub fn distributive_meet(&self, family: &Subset) -> Result<bool> {
        family.check_carrier(self.len())?;
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(self.is_distributive_meet(family))
    }

    fn is_distributive_meet(&self, family: &Subset) -> bool {
        let m = self.meet_all(family.iter());
        (0..self.len())
            .all(|a| self.join(a, m) == self.meet_all(family.iter().map(|x| self.join(a, x))))
    }

    /// The d-prime elements: `x ≠ top` such that every distributive meet
    /// `⋀M ≤ x` (M nonempty and finite) has a factor `m ≤ x`.
    ///
    /// The empty meet equals the top, which is below `x` only when `x` is
    /// the top; this is exactly the `x ≠ top` exclusion.
    pub fn d_prime(&self, mode: DPrimeMode) -> Subset {
        let n = self.len();
        let mut d_prime = Subset::full(n);
        d_prime.remove(self.top);
        match mode {
            DPrimeMode::Binary => {
                for p in 0..n {
                    for q in (p + 1)..n {
                        let family = Subset::from_indices(n, [p, q]);
                        if !self.is_distributive_meet(&family) {
                            continue;
                        }
                        self.exclude_witnessed(&mut d_prime, &family);
                    }
                }
            }
            DPrimeMode::Exact => {
                assert!(n < 25, "exact d-prime check on {n} elements is infeasible");
                for family in Subset::all(n) {
                    if family.len() < 2 || !self.is_distributive_meet(&family) {
                        continue;
                    }
                    self.exclude_witnessed(&mut d_prime, &family);
                }
            }
        }
        d_prime
    }

    /// Remove from `d_prime` every `x ≥ ⋀M` having no factor of `M` below it.
    fn exclude_witnessed(&self, d_prime: &mut Subset, family: &Subset) {
        let m = self.meet_all(family.iter());
        for x in self.poset.up(m).iter() {
            if !family.iter().any(|f| self.leq(f, x)) {
                d_prime.remove(x);
            }
        }
    }

    /// `x ≠ top` with `x = y ∧ z ⟹ x ∈ {y, z}`.
    pub fn meet_irreducibles(&self) -> Subset {
        let n = self.len();
        Subset::from_predicate(n, |x| {
            x != self.top
                && (0..n).all(|y| (0..n).all(|z| self.meet(y, z) != x || y == x || z == x))
        })
    }

    /// `x ≠ bottom` with `x = y ∨ z ⟹ x ∈ {y, z}`.
    pub fn join_irreducibles(&self) -> Subset {
        self.dual().meet_irreducibles()
    }

    /// Generators of the prime filters: proper filters `↑f` with
    /// `a ∨ b ∈ ↑f ⟹ a ∈ ↑f or b ∈ ↑f`.  Indices refer to [`Lattice::filt`].
    pub fn prime_filters(&self) -> Subset {
        let n = self.len();
        Subset::from_predicate(n, |f| {
            f != self.bottom
                && (0..n).all(|a| {
                    (0..n)
                        .all(|b| !self.leq(f, self.join(a, b)) || self.leq(f, a) || self.leq(f, b))
                })
        })
    }
}

pub(crate) fn find_cycle(edges: &Relation) -> Option<usize> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(v: usize, edges: &Relation, marks: &mut [Mark]) -> Option<usize> {
        marks[v] = Mark::Active;
        for w in edges.row(v).iter() {
            match marks[w] {
                Mark::Active => return Some(w),
                Mark::New => {
                    if let Some(c) = visit(w, edges, marks) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        marks[v] = Mark::Done;
        None
    }
    let n = edges.left_len();
    let mut marks = vec![Mark::New; n];
    (0..n).find_map(|v| {
        if marks[v] == Mark::New {
            visit(v, edges, &mut marks)
        } else {
            None
        }
    })
}

pub(crate) fn reflexive_transitive_closure(edges: &Relation) -> Relation {
    let n = edges.left_len();
    let mut reach: Vec<Subset> = (0..n)
        .map(|v| {
            let mut r = edges.row(v).clone();
            r.insert(v);
            r
        })
        .collect();
    // Warshall.
    for k in 0..n {
        for i in 0..n {
            if reach[i].contains(k) {
                let via = reach[k].clone();
                reach[i].union_with(&via);
            }
        }
    }
    Relation::from_fn(n, n, |i, j| reach[i].contains(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_chain_from_covers() {
        let two = Lattice::from_covers("TWO", &["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two.bottom(), 0);
        assert_eq!(two.top(), 1);
        assert_eq!(two.meet(0, 1), 0);
        assert_eq!(two.join(0, 1), 1);
    }

    #[test]
    fn two_cycle_is_detected() {
        let err = Lattice::from_covers(
            "bad",
            &["0", "a", "b", "1"],
            &[("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")],
        )
        .unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
    }

    #[test]
    fn missing_top_is_reported() {
        let err =
            Lattice::from_covers("bad", &["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap_err();
        assert_eq!(err, Error::NoBound(Bound::Top));
    }

    #[test]
    fn meet_irreducibles_of_small_chains() {
        let two = fixtures::chain(2);
        assert_eq!(two.meet_irreducibles().iter().collect::<Vec<_>>(), vec![0]);
        let c3 = fixtures::chain(3);
        assert_eq!(
            c3.meet_irreducibles().iter().collect::<Vec<_>>(),
            vec![0, 1]
        );
    }

    #[test]
    fn distributive_meet_examples() {
        let m3 = fixtures::diamond(3);
        let a = m3.index_of("a").unwrap();
        let b = m3.index_of("b").unwrap();
        assert!(!m3
            .distributive_meet(&Subset::from_indices(5, [a, b]))
            .unwrap());
        assert!(m3.distributive_meet(&Subset::singleton(5, a)).unwrap());
        assert_eq!(
            m3.distributive_meet(&Subset::empty(5)),
            Err(Error::EmptyFamily)
        );
        let b4 = fixtures::boolean_square();
        let (a, b) = (b4.index_of("a").unwrap(), b4.index_of("b").unwrap());
        assert!(b4
            .distributive_meet(&Subset::from_indices(4, [a, b]))
            .unwrap());
    }
}
