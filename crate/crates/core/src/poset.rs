//! Finite labelled partial orders.

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::subset::Subset;

/// A finite partial order with a name for every element.
///
/// The order is stored as the relation `≤`, so `order.row(x)` is `↑x` and
/// `order.col(x)` is `↓x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    order: Relation,
    labels: Vec<String>,
}

impl Poset {
    /// Build from an order relation, checking reflexivity, antisymmetry and
    /// transitivity.
    pub fn new(order: Relation, labels: Vec<String>) -> Result<Self> {
        let n = order.left_len();
        assert_eq!(
            n,
            order.right_len(),
            "order must be a relation on one carrier"
        );
        assert_eq!(n, labels.len(), "one label per element");
        if !order.is_reflexive() {
            let x = (0..n).find(|&x| !order.contains(x, x)).unwrap_or(0);
            return Err(Error::NotValidated(format!(
                "order is not reflexive at `{}`",
                labels[x]
            )));
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if order.contains(x, y) && order.contains(y, x) {
                    return Err(Error::NotAntisymmetric(
                        labels[x].clone(),
                        labels[y].clone(),
                    ));
                }
            }
        }
        if !order.is_transitive() {
            return Err(Error::NotValidated("order is not transitive".into()));
        }
        Ok(Poset { order, labels })
    }

    /// Build from a relation that is known to be a partial order.
    pub(crate) fn new_unchecked(order: Relation, labels: Vec<String>) -> Self {
        debug_assert!(Poset::new(order.clone(), labels.clone()).is_ok());
        Poset { order, labels }
    }

    /// Build from cover pairs `(lower, upper)` given by index; the order is
    /// their reflexive-transitive closure.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut edges = Relation::empty(n, n);
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::SideMismatch {
                    expected: n,
                    found: lo.max(hi) + 1,
                });
            }
            edges.insert(lo, hi);
        }
        if let Some(v) = crate::lattice::find_cycle(&edges) {
            return Err(Error::CycleDetected(labels[v].clone()));
        }
        Poset::new(crate::lattice::reflexive_transitive_closure(&edges), labels)
    }

    /// The discrete order (antichain).
    pub fn antichain(labels: Vec<String>) -> Self {
        Poset {
            order: Relation::identity(labels.len()),
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.contains(x, y)
    }

    pub fn order(&self) -> &Relation {
        &self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// `↑x`.
    pub fn up(&self, x: usize) -> &Subset {
        self.order.row(x)
    }

    /// `↓x`.
    pub fn down(&self, x: usize) -> &Subset {
        self.order.col(x)
    }

    /// `↑S`.
    pub fn up_closure(&self, s: &Subset) -> Subset {
        self.order.image(s)
    }

    /// `↓S`.
    pub fn down_closure(&self, s: &Subset) -> Subset {
        self.order.preimage(s)
    }

    pub fn is_upset(&self, s: &Subset) -> bool {
        self.up_closure(s) == *s
    }

    pub fn is_downset(&self, s: &Subset) -> bool {
        self.down_closure(s) == *s
    }

    /// Maximal elements of `s`.
    pub fn maximal(&self, s: &Subset) -> Subset {
        Subset::from_predicate(self.len(), |x| {
            s.contains(x) && s.iter().all(|y| y == x || !self.leq(x, y))
        })
    }

    /// Minimal elements of `s`.
    pub fn minimal(&self, s: &Subset) -> Subset {
        Subset::from_predicate(self.len(), |x| {
            s.contains(x) && s.iter().all(|y| y == x || !self.leq(y, x))
        })
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y
                    && self.leq(x, y)
                    && !(0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The order-dual poset (same labels).
    pub fn dual(&self) -> Poset {
        Poset {
            order: self.order.inverse(),
            labels: self.labels.clone(),
        }
    }

    /// The subposet on `members`, together with the embedding (sub index →
    /// ambient index).
    pub fn subposet(&self, members: &Subset) -> (Poset, Vec<usize>) {
        let embedding: Vec<usize> = members.iter().collect();
        let order = self.order.restrict(&embedding, &embedding);
        let labels = embedding.iter().map(|&i| self.labels[i].clone()).collect();
        (Poset { order, labels }, embedding)
    }

    /// All upsets, in lexicographic bit order.
    ///
    /// Depth-first over elements in index order; an element may be excluded
    /// only if none of its already-decided lower elements was included, which
    /// prunes most non-upsets early.
    pub fn upsets(&self) -> Vec<Subset> {
        let n = self.len();
        let mut out = Vec::new();
        fn go(p: &Poset, i: usize, current: &mut Subset, out: &mut Vec<Subset>) {
            if i == p.len() {
                if p.is_upset(current) {
                    out.push(current.clone());
                }
                return;
            }
            // Decide membership of i.
            let forced_in = p
                .down(i)
                .iter()
                .any(|z| z != i && z < i && current.contains(z));
            if !forced_in {
                go(p, i + 1, current, out);
            }
            current.insert(i);
            go(p, i + 1, current, out);
            current.remove(i);
        }
        let mut current = Subset::empty(n);
        go(self, 0, &mut current, &mut out);
        out.sort();
        out
    }

    /// All downsets, in lexicographic bit order.
    pub fn downsets(&self) -> Vec<Subset> {
        self.dual().upsets()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        Poset::new(
            Relation::from_fn(n, n, |x, y| x <= y),
            (0..n).map(|i| i.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn chain_upsets_are_final_segments() {
        let p = chain(3);
        assert_eq!(p.upsets().len(), 4);
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn covers_round_trip() {
        let p = chain(4);
        let q = Poset::from_covers(p.labels().to_vec(), &p.covers()).unwrap();
        assert_eq!(p, q);
        assert!(matches!(
            Poset::from_covers(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected(_))
        ));
    }

    #[test]
    fn antichain_has_all_subsets_as_upsets() {
        let p = Poset::antichain(vec!["a".into(), "b".into(), "c".into()]);
        assert_eq!(p.upsets().len(), 8);
    }

    #[test]
    fn rejects_non_antisymmetric() {
        let r = Relation::from_fn(2, 2, |_, _| true);
        assert!(matches!(
            Poset::new(r, vec!["a".into(), "b".into()]),
            Err(Error::NotAntisymmetric(_, _))
        ));
    }
}
