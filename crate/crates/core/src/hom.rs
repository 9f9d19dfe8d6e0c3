//! Bounded lattice homomorphisms, monotone maps and their adjoints.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// A map between finite lattices given by its table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeHom {
    source: Arc<Lattice>,
    target: Arc<Lattice>,
    map: Vec<usize>,
}

impl LatticeHom {
    /// Checked constructor: the map must preserve `∧`, `∨`, `0` and `1`.
    pub fn new(source: Arc<Lattice>, target: Arc<Lattice>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&v| v >= target.len()) {
            return Err(Error::NotAHomomorphism("table has the wrong shape".into()));
        }
        if let Some(reason) = hom_defect(&source, &target, &map) {
            return Err(Error::NotAHomomorphism(reason));
        }
        Ok(LatticeHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(lattice: Arc<Lattice>) -> Self {
        let map = (0..lattice.len()).collect();
        LatticeHom {
            source: lattice.clone(),
            target: lattice,
            map,
        }
    }

    pub fn source(&self) -> &Arc<Lattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Lattice> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LatticeHom) -> Result<LatticeHom> {
        if *self.target != *next.source {
            return Err(Error::NotComposable(format!(
                "target {} differs from source {}",
                self.target.name(),
                next.source.name()
            )));
        }
        Ok(LatticeHom {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn as_monotone(&self) -> MonotoneMap {
        MonotoneMap {
            source: self.source.clone(),
            target: self.target.clone(),
            map: self.map.clone(),
        }
    }
}

/// First reason (if any) why a table fails to be a bounded lattice
/// homomorphism.
pub(crate) fn hom_defect(source: &Lattice, target: &Lattice, map: &[usize]) -> Option<String> {
    if map[source.bottom()] != target.bottom() {
        return Some("bottom not preserved".into());
    }
    if map[source.top()] != target.top() {
        return Some("top not preserved".into());
    }
    let n = source.len();
    for x in 0..n {
        for y in 0..n {
            if map[source.meet(x, y)] != target.meet(map[x], map[y]) {
                return Some(format!(
                    "meet of ({}, {}) not preserved",
                    source.label(x),
                    source.label(y)
                ));
            }
            if map[source.join(x, y)] != target.join(map[x], map[y]) {
                return Some(format!(
                    "join of ({}, {}) not preserved",
                    source.label(x),
                    source.label(y)
                ));
            }
        }
    }
    None
}

/// All bounded lattice homomorphisms `source → target`, in lexicographic
/// order of their tables.
pub fn enumerate_homs(source: &Arc<Lattice>, target: &Arc<Lattice>) -> Vec<LatticeHom> {
    let n = source.len();
    let mut out = Vec::new();
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[source.bottom()] = Some(target.bottom());
    if map[source.top()].is_some_and(|v| v != target.top()) {
        return out;
    }
    map[source.top()] = Some(target.top());

    fn consistent(source: &Lattice, target: &Lattice, map: &[Option<usize>], x: usize) -> bool {
        let Some(fx) = map[x] else { return true };
        (0..source.len()).all(|y| {
            let Some(fy) = map[y] else { return true };
            let meet_ok = map[source.meet(x, y)].is_none_or(|m| m == target.meet(fx, fy));
            let join_ok = map[source.join(x, y)].is_none_or(|j| j == target.join(fx, fy));
            meet_ok && join_ok
        })
    }

    fn go(
        i: usize,
        source: &Lattice,
        target: &Lattice,
        map: &mut Vec<Option<usize>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == source.len() {
            out.push(map.iter().map(|v| v.expect("all assigned")).collect());
            return;
        }
        if map[i].is_some() {
            if consistent(source, target, map, i) {
                go(i + 1, source, target, map, out);
            }
            return;
        }
        for v in 0..target.len() {
            map[i] = Some(v);
            if consistent(source, target, map, i) {
                go(i + 1, source, target, map, out);
            }
        }
        map[i] = None;
    }

    let mut tables = Vec::new();
    go(0, source, target, &mut map, &mut tables);
    for table in tables {
        if hom_defect(source, target, &table).is_none() {
            out.push(LatticeHom {
                source: source.clone(),
                target: target.clone(),
                map: table,
            });
        }
    }
    out
}

/// Which adjoint to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjointSide {
    /// `ℓ ⊣ f`: `ℓ(y) ≤ x ⟺ y ≤ f(x)`, `ℓ(y) = ⋀ f⁻¹(↑y)`.
    Left,
    /// `f ⊣ r`: `f(x) ≤ y ⟺ x ≤ r(y)`, `r(y) = ⋁ f⁻¹(↓y)`.
    Right,
}

/// An order-preserving map between finite lattices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneMap {
    source: Arc<Lattice>,
    target: Arc<Lattice>,
    map: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Arc<Lattice>, target: Arc<Lattice>, map: Vec<usize>) -> Result<Self> {
        assert_eq!(map.len(), source.len());
        for x in 0..source.len() {
            for y in 0..source.len() {
                if source.leq(x, y) && !target.leq(map[x], map[y]) {
                    return Err(Error::NotMonotone(
                        source.label(x).into(),
                        source.label(y).into(),
                    ));
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &Arc<Lattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Lattice> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Whether binary meets and the top are preserved (finitely: all meets).
    pub fn preserves_meets(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.map[s.top()] == t.top()
            && (0..s.len()).all(|x| {
                (0..s.len()).all(|y| self.map[s.meet(x, y)] == t.meet(self.map[x], self.map[y]))
            })
    }

    /// Whether binary joins and the bottom are preserved (finitely: all joins).
    pub fn preserves_joins(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.map[s.bottom()] == t.bottom()
            && (0..s.len()).all(|x| {
                (0..s.len()).all(|y| self.map[s.join(x, y)] == t.join(self.map[x], self.map[y]))
            })
    }

    /// The requested adjoint, or `None` when it does not exist (a left
    /// adjoint exists iff all meets are preserved, a right adjoint iff all
    /// joins are preserved).
    pub fn adjoint(&self, side: AdjointSide) -> Option<MonotoneMap> {
        let (s, t) = (&self.source, &self.target);
        let table: Vec<usize> = match side {
            AdjointSide::Left => (0..t.len())
                .map(|y| s.meet_all((0..s.len()).filter(|&x| t.leq(y, self.map[x]))))
                .collect(),
            AdjointSide::Right => (0..t.len())
                .map(|y| s.join_all((0..s.len()).filter(|&x| t.leq(self.map[x], y))))
                .collect(),
        };
        let galois = (0..t.len()).all(|y| {
            (0..s.len()).all(|x| match side {
                AdjointSide::Left => s.leq(table[y], x) == t.leq(y, self.map[x]),
                AdjointSide::Right => t.leq(self.map[x], y) == s.leq(x, table[y]),
            })
        });
        galois.then(|| MonotoneMap {
            source: t.clone(),
            target: s.clone(),
            map: table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_to_two_has_only_identity() {
        let two = Arc::new(fixtures::chain(2));
        let homs = enumerate_homs(&two, &two);
        assert_eq!(homs.len(), 1);
        assert!(homs[0].is_identity());
    }

    #[test]
    fn square_to_two_has_two_homs() {
        let b4 = Arc::new(fixtures::boolean_square());
        let two = Arc::new(fixtures::chain(2));
        assert_eq!(enumerate_homs(&b4, &two).len(), 2);
    }

    #[test]
    fn chain3_to_two_has_two_homs() {
        let c3 = Arc::new(fixtures::chain(3));
        let two = Arc::new(fixtures::chain(2));
        assert_eq!(enumerate_homs(&c3, &two).len(), 2);
    }

    #[test]
    fn identity_is_its_own_adjoint() {
        let m3 = Arc::new(fixtures::diamond(3));
        let id = LatticeHom::identity(m3).as_monotone();
        assert_eq!(id.adjoint(AdjointSide::Left).unwrap().map(), id.map());
        assert_eq!(id.adjoint(AdjointSide::Right).unwrap().map(), id.map());
    }

    #[test]
    fn non_monotone_map_is_rejected() {
        let two = Arc::new(fixtures::chain(2));
        assert!(matches!(
            MonotoneMap::new(two.clone(), two, vec![1, 0]),
            Err(Error::NotMonotone(_, _))
        ));
    }
}
