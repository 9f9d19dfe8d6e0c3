//! Subsets of a finite carrier `{0, …, n−1}`.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of a finite carrier, stored as a membership bit vector whose
/// length is the carrier size.
///
/// The total order on subsets is *lexicographic bit order*: membership
/// vectors are compared position by position from index 0, with absence
/// before presence.  Stable families are stored sorted in this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(carrier: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(carrier),
        }
    }

    pub fn full(carrier: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(carrier);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn singleton(carrier: usize, element: usize) -> Self {
        let mut s = Self::empty(carrier);
        s.insert(element);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(carrier: usize, members: I) -> Self {
        let mut s = Self::empty(carrier);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn from_predicate(carrier: usize, mut member: impl FnMut(usize) -> bool) -> Self {
        Self::from_indices(carrier, (0..carrier).filter(|&i| member(i)))
    }

    /// Size of the ambient carrier (not the number of members).
    pub fn carrier_len(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.carrier_len()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits.contains(element)
    }

    pub fn insert(&mut self, element: usize) {
        assert!(
            element < self.carrier_len(),
            "element {element} outside carrier"
        );
        self.bits.insert(element);
    }

    pub fn remove(&mut self, element: usize) {
        self.bits.set(element, false);
    }

    pub fn toggle(&mut self, element: usize) {
        self.bits.toggle(element);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.ones().next()
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Subset { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.carrier_len(), other.carrier_len());
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Subset { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.carrier_len(), other.carrier_len());
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Subset { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.carrier_len(), other.carrier_len());
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Subset { bits }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Fails with [`Error::SideMismatch`] unless the subset lives on a
    /// carrier of size `expected`.
    pub fn check_carrier(&self, expected: usize) -> Result<()> {
        if self.carrier_len() == expected {
            Ok(())
        } else {
            Err(Error::SideMismatch {
                expected,
                found: self.carrier_len(),
            })
        }
    }

    /// Re-express a subset of a sub-carrier (given by `embedding`, mapping
    /// sub-carrier index to ambient index) as a subset of the ambient carrier.
    pub fn embed(&self, embedding: &[usize], ambient: usize) -> Self {
        Self::from_indices(ambient, self.iter().map(|i| embedding[i]))
    }

    /// Restrict to a sub-carrier given by `embedding`.
    pub fn restrict(&self, embedding: &[usize]) -> Self {
        Self::from_predicate(embedding.len(), |i| self.contains(embedding[i]))
    }

    /// All subsets of a carrier, in lexicographic bit order.
    ///
    /// # Panics
    /// Panics for carriers of 25 or more points; callers guard sizes first.
    pub fn all(carrier: usize) -> impl Iterator<Item = Subset> {
        assert!(carrier < 25, "power set of {carrier} points requested");
        let total: u32 = 1 << carrier;
        let mut all: Vec<Subset> = (0..total)
            .map(|mask| Subset::from_predicate(carrier, |i| mask & (1 << i) != 0))
            .collect();
        all.sort();
        all.into_iter()
    }

    /// Render with element labels, e.g. `{↑a, ↑b}`.
    pub fn display_with<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let names: Vec<&str> = self.iter().map(|i| labels[i].as_ref()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.carrier_len().max(other.carrier_len());
        for i in 0..n {
            match (self.contains(i), other.contains(i)) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        self.carrier_len().cmp(&other.carrier_len())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_and_membership() {
        let s = Subset::from_indices(4, [0, 2]);
        let c = s.complement();
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert!(s.is_disjoint(&c));
        assert!(s.union(&c).is_full());
    }

    #[test]
    fn lexicographic_bit_order() {
        let mut all: Vec<Subset> = Subset::all(2).collect();
        all.sort();
        let as_vecs: Vec<Vec<usize>> = all.iter().map(|s| s.iter().collect()).collect();
        assert_eq!(as_vecs, vec![vec![], vec![1], vec![0], vec![0, 1]]);
    }

    #[test]
    fn embed_restrict_roundtrip() {
        let embedding = [1, 3, 4];
        let s = Subset::from_indices(3, [0, 2]);
        let e = s.embed(&embedding, 5);
        assert_eq!(e.iter().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(e.restrict(&embedding), s);
    }
}
