//! Binary relations between finite carriers and the modal operators they
//! induce.
//!
//! For `R ⊆ X × Y`, with `A ⊆ X` and `B ⊆ Y`:
//!
//! | operator | symbol | definition |
//! |----------|--------|------------|
//! | [`Relation::diamond`]       | ◇ | `R⁻¹[B]` |
//! | [`Relation::boxed`]         | □ | `−R⁻¹[−B]` = `{x : R[x] ⊆ B}` |
//! | [`Relation::black_diamond`] | ◆ | `R[A]` |
//! | [`Relation::black_box`]     | ■ | `−R[−A]` = `{y : R⁻¹[y] ⊆ A}` |
//!
//! ◆ is left adjoint to □: `◆A ⊆ B ⟺ A ⊆ □B`.

use std::fmt;

use crate::error::Result;
use crate::subset::Subset;

/// The four modal operators of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Modality {
    /// ◇: preimage, acts on right-hand subsets.
    Diamond,
    /// □: universal preimage, acts on right-hand subsets.
    Box,
    /// ◆: image, acts on left-hand subsets.
    BlackDiamond,
    /// ■: universal image, acts on left-hand subsets.
    BlackBox,
}

/// A relation `R ⊆ X × Y` stored as rows `R[x]` and columns `R⁻¹[y]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<Subset>,
    cols: Vec<Subset>,
}

impl Relation {
    pub fn empty(left: usize, right: usize) -> Self {
        Relation {
            rows: vec![Subset::empty(right); left],
            cols: vec![Subset::empty(left); right],
        }
    }

    pub fn from_fn(
        left: usize,
        right: usize,
        mut related: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let mut r = Self::empty(left, right);
        for x in 0..left {
            for y in 0..right {
                if related(x, y) {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(
        left: usize,
        right: usize,
        pairs: I,
    ) -> Self {
        let mut r = Self::empty(left, right);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    /// The identity (equality) relation on a carrier.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |x, y| x == y)
    }

    pub fn left_len(&self) -> usize {
        self.rows.len()
    }

    pub fn right_len(&self) -> usize {
        self.cols.len()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
        self.cols[y].insert(x);
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x].remove(y);
        self.cols[y].remove(x);
    }

    /// Flip membership of one pair (used by mutation testing).
    pub fn toggle(&mut self, x: usize, y: usize) {
        if self.contains(x, y) {
            self.remove(x, y);
        } else {
            self.insert(x, y);
        }
    }

    /// `R[x]`.
    pub fn row(&self, x: usize) -> &Subset {
        &self.rows[x]
    }

    /// `R⁻¹[y]`.
    pub fn col(&self, y: usize) -> &Subset {
        &self.cols[y]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Subset::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Subset::is_empty)
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn inverse(&self) -> Relation {
        Relation {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    pub fn complement(&self) -> Relation {
        Relation::from_fn(self.left_len(), self.right_len(), |x, y| {
            !self.contains(x, y)
        })
    }

    /// Relational composition `other ∘ self` (first `self`, then `other`).
    pub fn then(&self, other: &Relation) -> Relation {
        assert_eq!(
            self.right_len(),
            other.left_len(),
            "relations not composable"
        );
        let mut out = Relation::empty(self.left_len(), other.right_len());
        for x in 0..self.left_len() {
            let image = other.image(&self.rows[x]);
            for z in image.iter() {
                out.insert(x, z);
            }
        }
        out
    }

    pub fn is_subrelation(&self, other: &Relation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    /// Restrict to `left × right`, reindexing to the sub-carriers listed by
    /// the embeddings.
    pub fn restrict(&self, left: &[usize], right: &[usize]) -> Relation {
        Relation::from_fn(left.len(), right.len(), |i, j| {
            self.contains(left[i], right[j])
        })
    }

    /// `R[A]` (◆).
    pub fn image(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.right_len());
        for x in a.iter() {
            out.union_with(&self.rows[x]);
        }
        out
    }

    /// `R⁻¹[B]` (◇).
    pub fn preimage(&self, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.left_len());
        for y in b.iter() {
            out.union_with(&self.cols[y]);
        }
        out
    }

    /// ◇B = R⁻¹[B].
    pub fn diamond(&self, b: &Subset) -> Subset {
        self.preimage(b)
    }

    /// □B = {x : R[x] ⊆ B}.
    pub fn boxed(&self, b: &Subset) -> Subset {
        Subset::from_predicate(self.left_len(), |x| self.rows[x].is_subset(b))
    }

    /// ◆A = R[A].
    pub fn black_diamond(&self, a: &Subset) -> Subset {
        self.image(a)
    }

    /// ■A = {y : R⁻¹[y] ⊆ A}.
    pub fn black_box(&self, a: &Subset) -> Subset {
        Subset::from_predicate(self.right_len(), |y| self.cols[y].is_subset(a))
    }

    /// Apply a modal operator, checking that the subset lives on the side
    /// the operator acts on.
    pub fn modal(&self, which: Modality, s: &Subset) -> Result<Subset> {
        match which {
            Modality::Diamond | Modality::Box => s.check_carrier(self.right_len())?,
            Modality::BlackDiamond | Modality::BlackBox => s.check_carrier(self.left_len())?,
        }
        Ok(match which {
            Modality::Diamond => self.diamond(s),
            Modality::Box => self.boxed(s),
            Modality::BlackDiamond => self.black_diamond(s),
            Modality::BlackBox => self.black_box(s),
        })
    }

    /// Whether every left point has a successor.
    pub fn is_serial(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty())
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.left_len().min(self.right_len())).all(|x| self.contains(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.left_len()).all(|x| self.image(&self.rows[x]).is_subset(&self.rows[x]))
    }

    /// Render as a list of labelled pairs.
    pub fn display_with<S: AsRef<str>, T: AsRef<str>>(&self, left: &[S], right: &[T]) -> String {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("({}, {})", left[x].as_ref(), right[y].as_ref()))
            .collect();
        format!("{{{}}}", pairs.join(", "))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_of_empty_relation_is_everything() {
        let r = Relation::empty(3, 2);
        assert!(r.boxed(&Subset::empty(2)).is_full());
    }

    #[test]
    fn black_diamond_is_direct_image() {
        let r = Relation::from_pairs(2, 2, [(0, 1)]);
        assert_eq!(
            r.black_diamond(&Subset::singleton(2, 0)),
            Subset::singleton(2, 1)
        );
    }

    #[test]
    fn modal_rejects_wrong_side() {
        let r = Relation::empty(3, 2);
        assert!(r.modal(Modality::Box, &Subset::empty(3)).is_err());
        assert!(r.modal(Modality::BlackBox, &Subset::empty(3)).is_ok());
    }

    #[test]
    fn composition_follows_pairs() {
        let r = Relation::from_pairs(2, 2, [(0, 1)]);
        let s = Relation::from_pairs(2, 3, [(1, 2)]);
        assert_eq!(r.then(&s).pairs(), vec![(0, 2)]);
    }
}
