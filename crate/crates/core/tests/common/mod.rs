//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use latdual_core::fixtures;
use latdual_core::{Lattice, LatticeHom};

pub fn arc(l: Lattice) -> Arc<Lattice> {
    Arc::new(l)
}

/// The embedding of `{0, a, b, 1}` into `M4` fixing the labels.
pub fn b4_into_m4() -> LatticeHom {
    let b4 = arc(fixtures::boolean_square());
    let m4 = arc(fixtures::diamond(4));
    LatticeHom::new(b4, m4, vec![0, 1, 2, 5])
        .expect("the label-preserving embedding is a homomorphism")
}

/// Labels of the members of a subset.
pub fn names(labels: &[String], s: &latdual_core::Subset) -> Vec<String> {
    s.iter().map(|i| labels[i].clone()).collect()
}

/// Labels of the pairs of a relation.
pub fn pair_names(
    left: &[String],
    right: &[String],
    r: &latdual_core::Relation,
) -> Vec<(String, String)> {
    r.pairs()
        .into_iter()
        .map(|(a, b)| (left[a].clone(), right[b].clone()))
        .collect()
}

pub fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}
