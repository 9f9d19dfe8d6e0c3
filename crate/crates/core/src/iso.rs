//! Lattice isomorphism search.
//!
//! A bijection between lattices that preserves and reflects the order also
//! preserves meets, joins and bounds, so the search works on the orders.

use crate::lattice::Lattice;

/// The lexicographically least isomorphism `a → b` (as a table), if any.
pub fn lattice_iso(a: &Lattice, b: &Lattice) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    // Cheap invariants: sizes of principal up- and down-sets.
    let signature = |l: &Lattice, x: usize| (l.poset().up(x).len(), l.poset().down(x).len());
    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];

    fn go(
        i: usize,
        a: &Lattice,
        b: &Lattice,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        signature: &dyn Fn(&Lattice, usize) -> (usize, usize),
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for v in 0..n {
            if used[v] || signature(a, i) != signature(b, v) {
                continue;
            }
            let compatible = (0..i).all(|j| {
                let w = map[j].expect("assigned");
                a.leq(i, j) == b.leq(v, w) && a.leq(j, i) == b.leq(w, v)
            });
            if !compatible {
                continue;
            }
            map[i] = Some(v);
            used[v] = true;
            if go(i + 1, a, b, map, used, signature) {
                return true;
            }
            used[v] = false;
            map[i] = None;
        }
        false
    }

    go(0, a, b, &mut map, &mut used, &signature)
        .then(|| map.into_iter().map(|v| v.expect("assigned")).collect())
}

/// Whether `table` is an order isomorphism `a → b`.
pub fn is_order_iso(a: &Lattice, b: &Lattice, table: &[usize]) -> bool {
    let n = a.len();
    if n != b.len() || table.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in table {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|x| (0..n).all(|y| a.leq(x, y) == b.leq(table[x], table[y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn m3_is_isomorphic_to_itself_by_identity() {
        let m3 = fixtures::diamond(3);
        assert_eq!(lattice_iso(&m3, &m3), Some(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn filters_of_m3_are_order_dual() {
        let m3 = fixtures::diamond(3);
        assert!(lattice_iso(&m3.filt(), &m3.dual()).is_some());
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        assert!(lattice_iso(&fixtures::chain(3), &fixtures::boolean_square()).is_none());
    }
}
