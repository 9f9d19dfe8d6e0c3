//! Exhaustive generation of finite lattices up to isomorphism.
//!
//! A lattice on `n ≥ 2` elements is a bounded poset whose `n − 2` middle
//! elements form some poset.  Candidates are generated as naturally
//! labelled posets on the middle elements (the order relation is contained
//! in the index order), bounded below and above, and kept when they are
//! lattices.  Duplicates are removed through a canonical code: the
//! lexicographically least order matrix over all natural labelings.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::subset::Subset;

/// Largest size accepted by [`enumerate_lattices`].
pub const MAX_ENUMERATION_SIZE: usize = 8;

/// Canonical code of a lattice: its order matrix (row-major bits) under the
/// natural labeling that minimises it.  Two lattices are isomorphic iff
/// their codes are equal.
pub fn canonical_code(lattice: &Lattice) -> Vec<bool> {
    let n = lattice.len();
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    linear_extensions(lattice, &mut perm, &mut used, &mut |order| {
        // order[k] = element placed at position k
        let code: Vec<bool> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| lattice.leq(order[i], order[j]))
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    best.unwrap_or_default()
}

fn linear_extensions(
    lattice: &Lattice,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    let n = lattice.len();
    if perm.len() == n {
        visit(perm);
        return;
    }
    for x in 0..n {
        if used[x] {
            continue;
        }
        // x may be placed only once all strictly smaller elements are placed.
        if (0..n).any(|y| y != x && !used[y] && lattice.leq(y, x)) {
            continue;
        }
        used[x] = true;
        perm.push(x);
        linear_extensions(lattice, perm, used, visit);
        perm.pop();
        used[x] = false;
    }
}

/// One lattice per isomorphism class with `1 ≤ n ≤ max_n` elements, ordered
/// by size and then by canonical code.  Elements are labelled `0`, `1` for
/// the bounds and `a`, `b`, … for the rest, in a natural labeling.
pub fn enumerate_lattices(max_n: usize) -> Result<Vec<Lattice>> {
    if max_n > MAX_ENUMERATION_SIZE {
        return Err(Error::BoundTooLarge {
            requested: max_n,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(lattices_of_size(n));
    }
    Ok(out)
}

/// One lattice per isomorphism class with exactly `n` elements.
pub fn lattices_of_size(n: usize) -> Vec<Lattice> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        let l = Lattice::from_leq("L1_0", vec!["0".into()], |_, _| true).expect("trivial lattice");
        return vec![l];
    }
    let middle = n - 2;
    let pairs: Vec<(usize, usize)> = (0..middle)
        .flat_map(|i| ((i + 1)..middle).map(move |j| (i, j)))
        .collect();
    let mut classes: BTreeMap<Vec<bool>, Lattice> = BTreeMap::new();
    let labels = element_labels(n);
    for mask in 0u64..(1u64 << pairs.len()) {
        // strict order among middle elements
        let mut below = vec![Subset::empty(middle); middle];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                below[j].insert(i);
            }
        }
        if !is_transitive(&below) {
            continue;
        }
        let leq = |x: usize, y: usize| {
            x == y || x == 0 || y == n - 1 || (x != n - 1 && y != 0 && below[y - 1].contains(x - 1))
        };
        let Ok(lattice) = Lattice::from_leq("", labels.clone(), leq) else {
            continue;
        };
        let code = canonical_code(&lattice);
        classes.entry(code).or_insert(lattice);
    }
    classes
        .into_values()
        .enumerate()
        .map(|(k, l)| l.with_name(format!("L{n}_{k}")))
        .collect()
}

fn is_transitive(below: &[Subset]) -> bool {
    // below[j] = strict lower set of j; transitive iff below[i] ⊆ below[j]
    // whenever i ∈ below[j].
    below
        .iter()
        .all(|bj| bj.iter().all(|i| below[i].is_subset(bj)))
}

fn element_labels(n: usize) -> Vec<String> {
    let mut labels = vec!["0".to_string()];
    labels.extend((0..n.saturating_sub(2)).map(|i| ((b'a' + i as u8) as char).to_string()));
    if n >= 2 {
        labels.push("1".into());
    }
    labels
}
