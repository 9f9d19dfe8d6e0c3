//! The `X₀` versus `X_m` search over the DH duals of all small lattices,
//! with an independent set-level recomputation of every reported witness.
//!
//! `X₀` is the set of filters maximal in some `R⁻¹[y]`, `X_m` the
//! meet-irreducible filters and `X_p` the d-prime filters; the chain
//! `X₀ ⊆ X_m ⊆ X_p` is checked on every instance.

use std::fmt;

use latdual_core::enumerate::enumerate_lattices;
use latdual_core::functors::dh_of;
use latdual_core::{DPrimeMode, Lattice, Subset};
use serde::Serialize;

use crate::error::CliResult;

/// The three carriers of the DH dual of one lattice, by filter label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarrierSummary {
    pub lattice: String,
    pub x_p: Vec<String>,
    pub x_0: Vec<String>,
    pub x_m: Vec<String>,
}

/// `(X₀, X_m, X_p)` as subsets of `Filt(A)`.
pub fn carriers(a: &Lattice) -> (Subset, Subset, Subset) {
    let filt = a.filt();
    let (x0, _) = dh_of(a).x0_y0();
    (
        x0,
        filt.meet_irreducibles(),
        filt.d_prime(DPrimeMode::Exact),
    )
}

pub fn carrier_summary(a: &Lattice) -> CarrierSummary {
    let filt = a.filt();
    let (x0, xm, xp) = carriers(a);
    let names = |s: &Subset| s.iter().map(|i| filt.label(i).to_string()).collect();
    CarrierSummary {
        lattice: a.name().to_string(),
        x_p: names(&xp),
        x_0: names(&x0),
        x_m: names(&xm),
    }
}

/// Recompute `X₀` and `X_m` from the filters as explicit element sets,
/// without the lattice-level shortcuts used by [`carriers`].
pub fn recompute_x0_xm(a: &Lattice) -> (Subset, Subset) {
    let n = a.len();
    let filters: Vec<Subset> = (0..n)
        .map(|x| Subset::from_predicate(n, |z| a.leq(x, z)))
        .collect();
    let ideals: Vec<Subset> = (0..n)
        .map(|y| Subset::from_predicate(n, |z| a.leq(z, y)))
        .collect();
    let related = |f: usize, i: usize| filters[f].is_disjoint(&ideals[i]);
    let x0 = Subset::from_predicate(n, |f| {
        (0..n).any(|i| {
            related(f, i)
                && !(0..n).any(|g| g != f && filters[f].is_subset(&filters[g]) && related(g, i))
        })
    });
    let whole = Subset::full(n);
    let xm = Subset::from_predicate(n, |f| {
        filters[f] != whole
            && !(0..n).any(|g| {
                (0..n).any(|h| {
                    filters[g] != filters[f]
                        && filters[h] != filters[f]
                        && filters[g].intersection(&filters[h]) == filters[f]
                })
            })
    });
    (x0, xm)
}

/// A lattice where the inclusion `X₀ ⊆ X_m` is strict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictnessWitness {
    pub lattice: String,
    pub x_0: Vec<String>,
    pub x_m: Vec<String>,
}

/// Outcome of the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub max_size: usize,
    pub classes_checked: usize,
    /// Lattices where `X₀ ⊆ X_m ⊆ X_p` fails.
    pub chain_violations: Vec<String>,
    /// Re-verified witnesses of `X₀ ⊊ X_m`.
    pub strictness_witnesses: Vec<StrictnessWitness>,
    /// Candidates the independent recomputation did not confirm.
    pub unconfirmed_candidates: Vec<String>,
}

impl SearchReport {
    pub fn is_ok(&self) -> bool {
        self.chain_violations.is_empty() && self.unconfirmed_candidates.is_empty()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} classes checked, ", self.classes_checked)?;
        if self.chain_violations.is_empty() {
            f.write_str("inclusion chain confirmed, ")?;
        } else {
            write!(
                f,
                "inclusion chain fails on {}, ",
                self.chain_violations.join(", ")
            )?;
        }
        if self.strictness_witnesses.is_empty() {
            f.write_str("no strictness witness for X₀ ⊊ X_m")?;
        } else {
            let names: Vec<&str> = self
                .strictness_witnesses
                .iter()
                .map(|w| w.lattice.as_str())
                .collect();
            write!(f, "strictness witnesses for X₀ ⊊ X_m: {}", names.join(", "))?;
        }
        if !self.unconfirmed_candidates.is_empty() {
            write!(
                f,
                "; unconfirmed candidates: {}",
                self.unconfirmed_candidates.join(", ")
            )?;
        }
        Ok(())
    }
}

/// Search every lattice class with at most `max_size` elements.
pub fn search_x0_xm(max_size: usize) -> CliResult<SearchReport> {
    let lattices = enumerate_lattices(max_size)?;
    let mut report = SearchReport {
        max_size,
        classes_checked: lattices.len(),
        chain_violations: Vec::new(),
        strictness_witnesses: Vec::new(),
        unconfirmed_candidates: Vec::new(),
    };
    for a in &lattices {
        let (x0, xm, xp) = carriers(a);
        if !(x0.is_subset(&xm) && xm.is_subset(&xp)) {
            report.chain_violations.push(a.name().to_string());
        }
        if x0 != xm && x0.is_subset(&xm) {
            let (check_x0, check_xm) = recompute_x0_xm(a);
            if check_x0 == x0 && check_xm == xm {
                let summary = carrier_summary(a);
                report.strictness_witnesses.push(StrictnessWitness {
                    lattice: summary.lattice,
                    x_0: summary.x_0,
                    x_m: summary.x_m,
                });
            } else {
                report.unconfirmed_candidates.push(a.name().to_string());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use latdual_core::fixtures;

    fn strings(items: &[&str]) -> Vec<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn five_element_search_reports_ten_classes() {
        let report = search_x0_xm(5).unwrap();
        assert_eq!(
            report.to_string(),
            "10 classes checked, inclusion chain confirmed, no strictness witness for X₀ ⊊ X_m"
        );
    }

    #[test]
    fn diamond_carriers_are_the_atom_filters() {
        let summary = carrier_summary(&fixtures::diamond(3));
        assert_eq!(summary.x_0, strings(&["↑a", "↑b", "↑c"]));
        assert_eq!(summary.x_m, summary.x_0);
    }

    #[test]
    fn four_atom_diamond_x0_is_x_p_without_the_top_filter() {
        let summary = carrier_summary(&fixtures::diamond(4));
        assert_eq!(summary.x_0, strings(&["↑a", "↑b", "↑c", "↑d"]));
        assert_eq!(summary.x_m, summary.x_0);
    }

    #[test]
    fn recomputation_agrees_on_small_lattices() {
        for a in enumerate_lattices(6).unwrap() {
            let (x0, xm, _) = carriers(&a);
            assert_eq!(recompute_x0_xm(&a), (x0, xm), "{}", a.name());
        }
    }
}
