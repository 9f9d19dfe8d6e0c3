//! Families of stable sets and the lattices they carry.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::subset::Subset;

/// How the members of a family are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyOrder {
    Inclusion,
    ReverseInclusion,
}

/// A family of subsets of a carrier that forms a bounded lattice under
/// (reverse) inclusion, with meets given by intersection (resp. the closure
/// of unions) as dictated by the order.
///
/// Members are stored in lexicographic bit order; element `i` of
/// [`StableFamily::lattice`] is member `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableFamily {
    carrier_len: usize,
    members: Vec<Subset>,
    order: FamilyOrder,
    lattice: Lattice,
}

impl StableFamily {
    /// Build from members (sorted and deduplicated here), labelling each
    /// member by its elements.
    pub fn new(
        name: impl Into<String>,
        carrier_labels: &[String],
        members: Vec<Subset>,
        order: FamilyOrder,
    ) -> Result<Self> {
        Self::with_labels(name, carrier_labels.len(), members, order, |s| {
            s.display_with(carrier_labels)
        })
    }

    /// Build with custom member labels.
    pub fn with_labels(
        name: impl Into<String>,
        carrier_len: usize,
        mut members: Vec<Subset>,
        order: FamilyOrder,
        label: impl Fn(&Subset) -> String,
    ) -> Result<Self> {
        members.sort();
        members.dedup();
        if let Some(bad) = members.iter().find(|m| m.carrier_len() != carrier_len) {
            return Err(Error::SideMismatch {
                expected: carrier_len,
                found: bad.carrier_len(),
            });
        }
        let labels = members.iter().map(&label).collect();
        let name = name.into();
        let lattice = Lattice::from_leq(name.clone(), labels, |i, j| match order {
            FamilyOrder::Inclusion => members[i].is_subset(&members[j]),
            FamilyOrder::ReverseInclusion => members[j].is_subset(&members[i]),
        })
        .map_err(|e| Error::NotValidated(format!("family {name} is not a bounded lattice: {e}")))?;
        Ok(StableFamily {
            carrier_len,
            members,
            order,
            lattice,
        })
    }

    pub fn carrier_len(&self) -> usize {
        self.carrier_len
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Subset {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn order(&self) -> FamilyOrder {
        self.order
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    /// Index of a member.
    pub fn position(&self, s: &Subset) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.position(s).is_some()
    }
}

/// All intersections of finitely many generators, including the empty
/// intersection (the whole carrier), in lexicographic bit order.
pub fn intersection_closure(carrier: usize, generators: &[Subset]) -> Vec<Subset> {
    let mut family = vec![Subset::full(carrier)];
    let mut seen: std::collections::HashSet<Subset> = family.iter().cloned().collect();
    let mut frontier = family.clone();
    while let Some(s) = frontier.pop() {
        for g in generators {
            let t = s.intersection(g);
            if seen.insert(t.clone()) {
                family.push(t.clone());
                frontier.push(t);
            }
        }
    }
    family.sort();
    family
}

/// All unions of finitely many generators, including the empty union.
pub fn union_closure(carrier: usize, generators: &[Subset]) -> Vec<Subset> {
    let complements: Vec<Subset> = generators.iter().map(Subset::complement).collect();
    let mut family: Vec<Subset> = intersection_closure(carrier, &complements)
        .iter()
        .map(Subset::complement)
        .collect();
    family.sort();
    family
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersections_of_two_generators() {
        let g = [
            Subset::from_indices(3, [0, 1]),
            Subset::from_indices(3, [1, 2]),
        ];
        let fam = intersection_closure(3, &g);
        assert_eq!(fam.len(), 4); // full, g0, g1, {1}
    }

    #[test]
    fn family_lattice_uses_inclusion() {
        let labels: Vec<String> = vec!["p".into()];
        let fam = StableFamily::new(
            "F",
            &labels,
            vec![Subset::full(1), Subset::empty(1)],
            FamilyOrder::Inclusion,
        )
        .unwrap();
        let l = fam.lattice();
        assert_eq!(fam.member(l.bottom()), &Subset::empty(1));
        assert_eq!(fam.member(l.top()), &Subset::full(1));
    }
}
