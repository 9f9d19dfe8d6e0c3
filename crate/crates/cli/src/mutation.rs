//! A seeded corpus of single-pair relation mutations for measuring validator
//! sensitivity.
//!
//! Bases are the DH and GvG duals of small lattices and the GvG, Hartung,
//! Urquhart and Ploščica duals of homomorphisms between small lattices.
//! Each mutant toggles one pair of one relation.  Hartung and Ploščica
//! spaces and CG morphisms are left out: their structure is derived from
//! the relation itself, so most single-pair changes yield another valid
//! object rather than a defective one.

use std::sync::Arc;

use latdual_core::enumerate::enumerate_lattices;
use latdual_core::functors::{DualHoms, Duals};
use latdual_core::spaces::validate_morphism;
use latdual_core::{enumerate_homs, Category, DualMorphism, DualSpace, Relation, ValidationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliResult;
use crate::recheck;

/// The unmutated object a mutant is drawn from.  Variants are built once
/// per corpus, so the size difference between them does not matter.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone)]
pub enum Base {
    Space {
        name: String,
        space: DualSpace,
    },
    Morphism {
        name: String,
        morphism: DualMorphism,
        source: DualSpace,
        target: DualSpace,
    },
}

impl Base {
    fn name(&self) -> &str {
        match self {
            Base::Space { name, .. } | Base::Morphism { name, .. } => name,
        }
    }
}

/// One mutated space or morphism.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone)]
pub enum Mutant {
    Space(DualSpace),
    Morphism {
        morphism: DualMorphism,
        source: DualSpace,
        target: DualSpace,
    },
}

/// A mutant with a description of the change.
#[derive(Debug, Clone)]
pub struct MutationCase {
    pub description: String,
    pub mutant: Mutant,
}

impl MutationCase {
    pub fn validate(&self) -> CliResult<ValidationReport> {
        Ok(match &self.mutant {
            Mutant::Space(space) => space.validate(),
            Mutant::Morphism {
                morphism,
                source,
                target,
            } => validate_morphism(morphism, source, target)?,
        })
    }

    /// Whether the brute-force re-check confirms `clause` is violated;
    /// `None` when the clause is outside the re-checker's coverage.
    pub fn recheck(&self, clause: &str) -> Option<bool> {
        match &self.mutant {
            Mutant::Space(space) => recheck::space_clause_violated(clause, space),
            Mutant::Morphism {
                morphism,
                source,
                target,
            } => recheck::morphism_clause_violated(clause, morphism, source, target),
        }
    }

    /// Whether the re-checker finds any covered clause violated.
    pub fn recheck_any(&self) -> bool {
        match &self.mutant {
            Mutant::Space(space) => recheck::covered_space_clauses(space)
                .iter()
                .any(|c| recheck::space_clause_violated(c, space) == Some(true)),
            Mutant::Morphism {
                morphism,
                source,
                target,
            } => recheck::covered_morphism_clauses(morphism).iter().any(|c| {
                recheck::morphism_clause_violated(c, morphism, source, target) == Some(true)
            }),
        }
    }
}

/// Every base: spaces of lattices with at most `max_space_size` elements,
/// morphisms dual to homomorphisms between lattices with at most
/// `max_hom_size` elements.  The order is canonical.
pub fn bases(max_space_size: usize, max_hom_size: usize) -> CliResult<Vec<Base>> {
    let mut out = Vec::new();
    for a in enumerate_lattices(max_space_size)? {
        let duals = Duals::of(&a)?;
        for c in [Category::Dh, Category::Gvg] {
            let space = duals.space(c);
            if relation_of_space(&space).is_some_and(|r| r.left_len() * r.right_len() > 0) {
                out.push(Base::Space {
                    name: format!("{c}({})", a.name()),
                    space,
                });
            }
        }
    }
    let small: Vec<(Arc<latdual_core::Lattice>, Duals)> = enumerate_lattices(max_hom_size)?
        .into_iter()
        .map(|a| Ok((Arc::new(a.clone()), Duals::of(&a)?)))
        .collect::<CliResult<_>>()?;
    for (a, duals_a) in &small {
        for (b, duals_b) in &small {
            for (k, alpha) in enumerate_homs(a, b).iter().enumerate() {
                let homs = DualHoms::of(alpha, duals_a, duals_b);
                for c in [Category::Gvg, Category::Hg, Category::Urq, Category::Plo] {
                    out.push(Base::Morphism {
                        name: format!("{c} dual of hom #{k} {} → {}", a.name(), b.name()),
                        morphism: homs.morphism(c),
                        source: duals_b.space(c),
                        target: duals_a.space(c),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn relation_of_space(space: &DualSpace) -> Option<&Relation> {
    match space {
        DualSpace::Dh(d) => Some(d.relation()),
        DualSpace::Gvg(g) => Some(g.relation()),
        _ => None,
    }
}

fn toggled(r: &Relation, a: usize, b: usize) -> Relation {
    let mut out = r.clone();
    out.toggle(a, b);
    out
}

/// Draw `count` mutants from `bases` with a ChaCha generator seeded by
/// `seed`.  Bases whose relations are all empty-shaped are skipped.
pub fn corpus(seed: u64, count: usize, bases: &[Base]) -> CliResult<Vec<MutationCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count && !bases.is_empty() {
        let base = &bases[rng.gen_range(0..bases.len())];
        if let Some(case) = mutate(base, &mut rng)? {
            out.push(case);
        }
    }
    Ok(out)
}

fn mutate(base: &Base, rng: &mut ChaCha8Rng) -> CliResult<Option<MutationCase>> {
    let pick = |rng: &mut ChaCha8Rng, r: &Relation| -> Option<(usize, usize)> {
        (r.left_len() * r.right_len() > 0).then(|| {
            (
                rng.gen_range(0..r.left_len()),
                rng.gen_range(0..r.right_len()),
            )
        })
    };
    Ok(match base {
        Base::Space { name, space } => {
            let r = relation_of_space(space).expect("space bases carry a relation");
            let Some((a, b)) = pick(rng, r) else {
                return Ok(None);
            };
            let mutated = match space {
                DualSpace::Dh(d) => DualSpace::Dh(d.with_relation(toggled(r, a, b))?),
                DualSpace::Gvg(g) => DualSpace::Gvg(g.with_relation(toggled(r, a, b))?),
                _ => unreachable!("only DH and GvG spaces are bases"),
            };
            Some(MutationCase {
                description: format!("{name}: toggle R pair ({a}, {b})"),
                mutant: Mutant::Space(mutated),
            })
        }
        Base::Morphism {
            name,
            morphism,
            source,
            target,
        } => {
            let (DualMorphism::Gvg(pair)
            | DualMorphism::Hg(pair)
            | DualMorphism::Urq(pair)
            | DualMorphism::Plo(pair)) = morphism
            else {
                unreachable!("only relation-pair morphisms are bases")
            };
            let right_side = rng.gen_bool(0.5);
            let r = if right_side { &pair.right } else { &pair.left };
            let Some((a, b)) = pick(rng, r) else {
                return Ok(None);
            };
            let mut changed = pair.clone();
            if right_side {
                changed.right.toggle(a, b);
            } else {
                changed.left.toggle(a, b);
            }
            let rebuilt = match morphism {
                DualMorphism::Gvg(_) => DualMorphism::Gvg(changed),
                DualMorphism::Hg(_) => DualMorphism::Hg(changed),
                DualMorphism::Urq(_) => DualMorphism::Urq(changed),
                _ => DualMorphism::Plo(changed),
            };
            let side = if right_side { "right" } else { "left" };
            Some(MutationCase {
                description: format!("{name}: toggle {side} pair ({a}, {b})"),
                mutant: Mutant::Morphism {
                    morphism: rebuilt,
                    source: source.clone(),
                    target: target.clone(),
                },
            })
        }
    })
}

/// Tally of a mutation run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MutationTally {
    pub total: usize,
    /// Rejected with a named clause.
    pub rejected: usize,
    /// Rejections whose clause the re-check confirms.
    pub confirmed: usize,
    /// Rejections whose clause the re-check finds satisfied.
    pub false_positives: Vec<String>,
    /// Rejections naming a clause outside the re-check's coverage.
    pub unchecked: Vec<String>,
    /// Accepted mutants the re-check finds defective.
    pub missed: Vec<String>,
}

impl MutationTally {
    pub fn rejection_rate(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.rejected as f64 / self.total as f64
        }
    }
}

/// Validate and re-check every mutant.
pub fn run_corpus(cases: &[MutationCase]) -> CliResult<MutationTally> {
    let mut tally = MutationTally {
        total: cases.len(),
        ..MutationTally::default()
    };
    for case in cases {
        let report = case.validate()?;
        match report.violated_clause() {
            Some(clause) => {
                tally.rejected += 1;
                match case.recheck(clause) {
                    Some(true) => tally.confirmed += 1,
                    Some(false) => tally
                        .false_positives
                        .push(format!("{} ({clause})", case.description)),
                    None => tally
                        .unchecked
                        .push(format!("{} ({clause})", case.description)),
                }
            }
            None if case.recheck_any() => tally.missed.push(case.description.clone()),
            None => {}
        }
    }
    Ok(tally)
}

/// Names of the bases, for reports.
pub fn base_names(bases: &[Base]) -> Vec<&str> {
    bases.iter().map(Base::name).collect()
}
