//! The exhaustive verification suites behind `latdual verify`.
//!
//! Each suite enumerates its instances in a canonical order (lattices by
//! size and canonical code, homomorphisms in enumeration order) and records
//! how many pass together with the first failure.  Reports are
//! byte-deterministic for a fixed size bound and seed; the wall time is
//! kept out of the serialized form.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use latdual_core::enumerate::enumerate_lattices;
use latdual_core::functors::chain::{gvg_embeddings, hg_embeddings};
use latdual_core::functors::{
    cg_from_filt, cg_from_filt_mor, e_functor, e_functor_mor, filt_from_cg, filt_from_cg_mor,
    filt_of_hom, functor_d, functor_d_mor, functor_g_mor, functor_hg_mor, functor_p, functor_p_inv,
    functor_u_mor, DualHoms, Duals,
};
use latdual_core::reconstruction::natural::first_difference;
use latdual_core::reconstruction::{
    check_naturality, check_roundtrip, check_triangle, nat_component, NaturalKind, WitnessKind,
};
use latdual_core::spaces::{star_compose, ClauseStatus};
use latdual_core::{
    enumerate_homs, Category, DualMorphism, DualSpace, Lattice, LatticeHom, Relation, Subset,
    ValidationReport,
};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::mutation;

/// Default upper bound on `--max-size` for `verify`.
pub const VERIFY_SIZE_LIMIT: usize = 6;

/// Homomorphism-based checks never go beyond this lattice size.
pub const HOM_SIZE_LIMIT: usize = 4;

/// Natural-component checks never go beyond this lattice size.
pub const COMPONENT_SIZE_LIMIT: usize = 5;

/// Number of seeded mutations in the validator suite.
pub const MUTATION_COUNT: usize = 1000;

/// Minimum share of mutants that must be rejected.
pub const MUTATION_REJECTION_THRESHOLD: f64 = 0.99;

/// Largest carrier on which the modal laws are checked over all subsets.
pub const MODAL_CARRIER_LIMIT: usize = 8;

/// A verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Roundtrip,
    Validators,
    FunctorLaws,
    Naturality,
    DistributiveCollapse,
    PloInverse,
    ModalAlgebra,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 7] = [
        Suite::Roundtrip,
        Suite::Validators,
        Suite::FunctorLaws,
        Suite::Naturality,
        Suite::DistributiveCollapse,
        Suite::PloInverse,
        Suite::ModalAlgebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Validators => "validators",
            Suite::FunctorLaws => "functor-laws",
            Suite::Naturality => "naturality",
            Suite::DistributiveCollapse => "distributive-collapse",
            Suite::PloInverse => "plo-inverse",
            Suite::ModalAlgebra => "modal-algebra",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first failing instance of a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub clause: String,
    pub witnesses: Vec<String>,
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub attempted: usize,
    pub passed: usize,
    pub first_failure: Option<Failure>,
    /// Informational notes (e.g. mutation statistics); deterministic.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.passed == self.attempted
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} passed",
            self.suite, self.passed, self.attempted
        )?;
        if let Some(fail) = &self.first_failure {
            write!(f, "\n  first failure: {} [{}]", fail.instance, fail.clause)?;
            for w in &fail.witnesses {
                write!(f, "\n    {w}")?;
            }
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Options shared by all suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_size: usize,
    pub seed: u64,
}

/// Accumulates instance outcomes in order.
struct Tally {
    suite: Suite,
    attempted: usize,
    passed: usize,
    first_failure: Option<Failure>,
    notes: Vec<String>,
    started: Instant,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally {
            suite,
            attempted: 0,
            passed: 0,
            first_failure: None,
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    fn pass(&mut self) {
        self.attempted += 1;
        self.passed += 1;
    }

    fn fail(
        &mut self,
        instance: impl Into<String>,
        clause: impl Into<String>,
        witnesses: Vec<String>,
    ) {
        self.attempted += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                instance: instance.into(),
                clause: clause.into(),
                witnesses,
            });
        }
    }

    /// Record `Ok(None)` as a pass, `Ok(Some(why))` and errors as failures.
    fn check(
        &mut self,
        instance: impl FnOnce() -> String,
        clause: &str,
        outcome: latdual_core::Result<Option<String>>,
    ) {
        match outcome {
            Ok(None) => self.pass(),
            Ok(Some(why)) => self.fail(instance(), clause, vec![why]),
            Err(e) => self.fail(instance(), clause, vec![e.to_string()]),
        }
    }

    fn validation(&mut self, instance: impl FnOnce() -> String, report: &ValidationReport) {
        match report.violation() {
            None => self.pass(),
            Some(outcome) => {
                let witnesses = match &outcome.status {
                    ClauseStatus::Violated(ws) => ws.iter().map(ToString::to_string).collect(),
                    _ => Vec::new(),
                };
                self.fail(instance(), outcome.id, witnesses);
            }
        }
    }

    fn equal(
        &mut self,
        instance: impl FnOnce() -> String,
        clause: &str,
        lhs: &DualMorphism,
        rhs: &DualMorphism,
    ) {
        let diff = first_difference(lhs, rhs)
            .or_else(|| (lhs != rhs).then(|| "morphisms differ".to_string()));
        self.check(instance, clause, Ok(diff));
    }

    fn finish(self) -> VerifyReport {
        VerifyReport {
            suite: self.suite.name().to_string(),
            attempted: self.attempted,
            passed: self.passed,
            first_failure: self.first_failure,
            notes: self.notes,
            wall_time: self.started.elapsed(),
        }
    }
}

/// Check the size bound, unless `allow_large` is set.
pub fn check_bound(requested: usize, limit: usize, allow_large: bool) -> CliResult<()> {
    if requested > limit && !allow_large {
        return Err(CliError::BoundTooLarge { requested, limit });
    }
    Ok(())
}

/// Run one suite (or all of them) and return the reports in order.
pub fn run_suite(suite: Suite, options: VerifyOptions) -> CliResult<Vec<VerifyReport>> {
    if suite == Suite::All {
        return Suite::CONCRETE
            .iter()
            .map(|&s| run_single(s, options))
            .collect();
    }
    Ok(vec![run_single(suite, options)?])
}

fn run_single(suite: Suite, options: VerifyOptions) -> CliResult<VerifyReport> {
    let n = options.max_size;
    match suite {
        Suite::Roundtrip => roundtrip(n),
        Suite::Validators => validators(n, options.seed),
        Suite::FunctorLaws => functor_laws(n),
        Suite::Naturality => naturality(n),
        Suite::DistributiveCollapse => distributive_collapse(n),
        Suite::PloInverse => plo_inverse(n),
        Suite::ModalAlgebra => modal_algebra(n),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// Lattices with their duals, wrapped for homomorphism enumeration.
struct Family {
    lattices: Vec<Arc<Lattice>>,
    duals: Vec<Duals>,
}

impl Family {
    fn up_to(n: usize) -> CliResult<Self> {
        let lattices: Vec<Arc<Lattice>> =
            enumerate_lattices(n)?.into_iter().map(Arc::new).collect();
        let duals = lattices
            .iter()
            .map(|a| Duals::of(a))
            .collect::<latdual_core::Result<_>>()?;
        Ok(Family { lattices, duals })
    }

    /// Every homomorphism `α: A_i → A_j` as `(i, j, α)`, canonically ordered.
    fn homs(&self) -> Vec<(usize, usize, LatticeHom)> {
        let mut out = Vec::new();
        for (i, a) in self.lattices.iter().enumerate() {
            for (j, b) in self.lattices.iter().enumerate() {
                out.extend(enumerate_homs(a, b).into_iter().map(|h| (i, j, h)));
            }
        }
        out
    }
}

fn hom_name(alpha: &LatticeHom) -> String {
    let images: Vec<&str> = (0..alpha.source().len())
        .map(|x| alpha.target().label(alpha.apply(x)))
        .collect();
    format!(
        "{} → {} [{}]",
        alpha.source().name(),
        alpha.target().name(),
        images.join(",")
    )
}

fn roundtrip(n: usize) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::Roundtrip);
    for a in enumerate_lattices(n)? {
        for c in Category::ALL {
            let outcome = check_roundtrip(&a, c).map(|_| None);
            t.check(
                || format!("{} via {c}", a.name()),
                "roundtrip.reconstruction-is-isomorphic",
                outcome,
            );
        }
    }
    Ok(t.finish())
}

fn validators(n: usize, seed: u64) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::Validators);
    let family = Family::up_to(n)?;
    for d in &family.duals {
        for c in Category::ALL {
            t.validation(
                || format!("{c} dual of {}", d.lattice.name()),
                &d.space(c).validate(),
            );
        }
    }
    let small = Family::up_to(n.min(HOM_SIZE_LIMIT))?;
    for (i, j, alpha) in small.homs() {
        let homs = DualHoms::of(&alpha, &small.duals[i], &small.duals[j]);
        for c in Category::ALL {
            let report = latdual_core::spaces::validate_morphism(
                &homs.morphism(c),
                &small.duals[j].space(c),
                &small.duals[i].space(c),
            )?;
            t.validation(|| format!("{c} dual of {}", hom_name(&alpha)), &report);
        }
    }
    let bases = mutation::bases(n, n.min(HOM_SIZE_LIMIT))?;
    let cases = mutation::corpus(seed, MUTATION_COUNT, &bases)?;
    let mut rejected = 0;
    for case in &cases {
        let report = case.validate()?;
        match report.violated_clause() {
            Some(clause) => {
                rejected += 1;
                match case.recheck(clause) {
                    Some(true) => t.pass(),
                    Some(false) => t.fail(
                        &case.description,
                        clause,
                        vec!["brute-force re-check finds the clause satisfied".into()],
                    ),
                    None => t.fail(
                        &case.description,
                        clause,
                        vec!["clause outside the brute-force re-check".into()],
                    ),
                }
            }
            None if case.recheck_any() => t.fail(
                &case.description,
                "mutation.accepted-defective",
                vec!["brute-force re-check finds a violation".into()],
            ),
            None => t.pass(),
        }
    }
    let rate = if cases.is_empty() {
        1.0
    } else {
        rejected as f64 / cases.len() as f64
    };
    if rate >= MUTATION_REJECTION_THRESHOLD {
        t.pass();
    } else {
        t.fail(
            "mutation corpus",
            "mutation.rejection-rate",
            vec![format!(
                "{rejected}/{} rejected, below {MUTATION_REJECTION_THRESHOLD}",
                cases.len()
            )],
        );
    }
    t.notes.push(format!(
        "mutations (seed {seed}): {rejected}/{} rejected with a named clause",
        cases.len()
    ));
    Ok(t.finish())
}

fn functor_laws(n: usize) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::FunctorLaws);
    const IDENTITY: &str = "functor-laws.identity-preserved";
    const COMPOSITION: &str = "functor-laws.composition-preserved";
    let family = Family::up_to(n.min(HOM_SIZE_LIMIT))?;
    for (i, a) in family.lattices.iter().enumerate() {
        let d = &family.duals[i];
        let id = LatticeHom::identity(a.clone());
        let homs = DualHoms::of(&id, d, d);
        for c in Category::ALL {
            t.equal(
                || format!("{c} dual of the identity of {}", a.name()),
                IDENTITY,
                &homs.morphism(c),
                &d.space(c).identity(),
            );
        }
        let id_of = |c: Category| d.space(c).identity();
        let (g, h, u) = (&d.gvg, &d.hg, &d.urq);
        let pair = |m: DualMorphism| m.as_pair().cloned().expect("relation-pair morphism");
        let cases = [
            (
                "G",
                DualMorphism::Gvg(functor_g_mor(&d.dh, &d.dh, &d.dh.identity())),
                id_of(Category::Gvg),
            ),
            (
                "Hg",
                DualMorphism::Hg(functor_hg_mor(g, g, &pair(id_of(Category::Gvg)))),
                id_of(Category::Hg),
            ),
            (
                "U",
                DualMorphism::Urq(functor_u_mor(h, h, &pair(id_of(Category::Hg)))),
                id_of(Category::Urq),
            ),
            ("P", DualMorphism::Plo(u.identity()), id_of(Category::Plo)),
        ];
        for (name, lhs, rhs) in cases {
            t.equal(
                || format!("{name} on the identity of the dual of {}", a.name()),
                IDENTITY,
                &lhs,
                &rhs,
            );
        }
        let d_space = functor_d(u)?;
        let d_id = functor_d_mor(u, u, &u.identity()).map(DualMorphism::Dh);
        match d_id {
            Ok(m) => t.equal(
                || format!("D on the identity of the dual of {}", a.name()),
                IDENTITY,
                &m,
                &DualMorphism::Dh(d_space.identity()),
            ),
            Err(e) => t.fail(
                format!("D on the identity of the dual of {}", a.name()),
                IDENTITY,
                vec![e.to_string()],
            ),
        }
        let filt_id = latdual_core::FiltMorphism {
            map: (0..d.filt.len()).collect(),
        };
        let m_space = cg_from_filt(&d.filt);
        t.equal(
            || format!("cg translation of the identity of Filt({})", a.name()),
            IDENTITY,
            &DualMorphism::Cg(cg_from_filt_mor(&d.filt, &d.filt, &filt_id)),
            &DualMorphism::Cg(m_space.identity()),
        );
        let back = filt_from_cg_mor(&d.cg, &d.cg, &d.cg.identity()).map(DualMorphism::Filt);
        let filt_len = filt_from_cg(&d.cg)?.len();
        let expected = DualMorphism::Filt(latdual_core::FiltMorphism {
            map: (0..filt_len).collect(),
        });
        match back {
            Ok(m) => t.equal(
                || {
                    format!(
                        "filter translation of the identity of the CG dual of {}",
                        a.name()
                    )
                },
                IDENTITY,
                &m,
                &expected,
            ),
            Err(e) => t.fail(
                format!(
                    "filter translation of the identity of the CG dual of {}",
                    a.name()
                ),
                IDENTITY,
                vec![e.to_string()],
            ),
        }
    }
    let homs = family.homs();
    for (i, j, alpha) in &homs {
        for (j2, k, beta) in &homs {
            if j2 != j {
                continue;
            }
            let (da, db, dc) = (&family.duals[*i], &family.duals[*j], &family.duals[*k]);
            let composite = alpha.then(beta)?;
            let (ha, hb, hc) = (
                DualHoms::of(alpha, da, db),
                DualHoms::of(beta, db, dc),
                DualHoms::of(&composite, da, dc),
            );
            let name = || format!("{} then {}", hom_name(alpha), hom_name(beta));
            for c in Category::ALL {
                let lhs = star_compose(&ha.morphism(c), &hb.morphism(c), &da.space(c));
                match lhs {
                    Ok(lhs) => t.equal(
                        || format!("{c}: {}", name()),
                        COMPOSITION,
                        &lhs,
                        &hc.morphism(c),
                    ),
                    Err(e) => t.fail(format!("{c}: {}", name()), COMPOSITION, vec![e.to_string()]),
                }
            }
            // The functors between dual categories applied to the dual homs.
            let g = |src: &Duals, tgt: &Duals, m: &latdual_core::DhMorphism| {
                DualMorphism::Gvg(functor_g_mor(&src.dh, &tgt.dh, m))
            };
            composition_law(
                &mut t,
                || format!("G: {}", name()),
                g(db, da, &ha.dh),
                g(dc, db, &hb.dh),
                g(dc, da, &hc.dh),
                &da.space(Category::Gvg),
            );
            let hgm = |src: &Duals, tgt: &Duals, m| {
                DualMorphism::Hg(functor_hg_mor(&src.gvg, &tgt.gvg, m))
            };
            composition_law(
                &mut t,
                || format!("Hg: {}", name()),
                hgm(db, da, &ha.gvg),
                hgm(dc, db, &hb.gvg),
                hgm(dc, da, &hc.gvg),
                &da.space(Category::Hg),
            );
            let um =
                |src: &Duals, tgt: &Duals, m| DualMorphism::Urq(functor_u_mor(&src.hg, &tgt.hg, m));
            composition_law(
                &mut t,
                || format!("U: {}", name()),
                um(db, da, &ha.hg),
                um(dc, db, &hb.hg),
                um(dc, da, &hc.hg),
                &da.space(Category::Urq),
            );
            let pm = |m: &latdual_core::RelationPair| DualMorphism::Plo(m.clone());
            composition_law(
                &mut t,
                || format!("P: {}", name()),
                pm(&ha.urq),
                pm(&hb.urq),
                pm(&hc.urq),
                &da.space(Category::Plo),
            );
            let dm = |src: &Duals, tgt: &Duals, m| {
                functor_d_mor(&src.urq, &tgt.urq, m).map(DualMorphism::Dh)
            };
            match (
                dm(db, da, &ha.urq),
                dm(dc, db, &hb.urq),
                dm(dc, da, &hc.urq),
                functor_d(&da.urq),
            ) {
                (Ok(fa), Ok(fb), Ok(fc), Ok(space)) => composition_law(
                    &mut t,
                    || format!("D: {}", name()),
                    fa,
                    fb,
                    fc,
                    &DualSpace::Dh(space),
                ),
                (a, b, c, s) => {
                    let why = [a.err(), b.err(), c.err(), s.err()]
                        .into_iter()
                        .flatten()
                        .map(|e| e.to_string())
                        .collect();
                    t.fail(format!("D: {}", name()), COMPOSITION, why);
                }
            }
            let mm = |src: &Duals, tgt: &Duals, f| {
                DualMorphism::Cg(cg_from_filt_mor(&src.filt, &tgt.filt, f))
            };
            composition_law(
                &mut t,
                || format!("cg translation: {}", name()),
                mm(db, da, &ha.filt),
                mm(dc, db, &hb.filt),
                mm(dc, da, &hc.filt),
                &DualSpace::Cg(cg_from_filt(&da.filt)),
            );
            let fm = |src: &Duals, tgt: &Duals, m| {
                filt_from_cg_mor(&src.cg, &tgt.cg, m).map(DualMorphism::Filt)
            };
            match (
                fm(db, da, &ha.cg),
                fm(dc, db, &hb.cg),
                fm(dc, da, &hc.cg),
                filt_from_cg(&da.cg),
            ) {
                (Ok(fa), Ok(fb), Ok(fc), Ok(family_a)) => composition_law(
                    &mut t,
                    || format!("filter translation: {}", name()),
                    fa,
                    fb,
                    fc,
                    &DualSpace::Filt(family_a.into_lattice()),
                ),
                (a, b, c, s) => {
                    let why = [a.err(), b.err(), c.err(), s.err()]
                        .into_iter()
                        .flatten()
                        .map(|e| e.to_string())
                        .collect();
                    t.fail(format!("filter translation: {}", name()), COMPOSITION, why);
                }
            }
            let filt_ab = star_compose(
                &DualMorphism::Filt(ha.filt.clone()),
                &DualMorphism::Filt(hb.filt.clone()),
                &da.space(Category::Filt),
            );
            match filt_ab {
                Ok(m) => t.equal(
                    || format!("Filt: {}", name()),
                    COMPOSITION,
                    &m,
                    &DualMorphism::Filt(filt_of_hom(&composite)),
                ),
                Err(e) => t.fail(
                    format!("Filt: {}", name()),
                    COMPOSITION,
                    vec![e.to_string()],
                ),
            }
        }
    }
    Ok(t.finish())
}

/// `F(first) ⋆ F(second) = F(composite)` where `second: C → B`,
/// `first: B → A` and `codomain` is the image of `A`.
fn composition_law(
    t: &mut Tally,
    instance: impl FnOnce() -> String,
    first: DualMorphism,
    second: DualMorphism,
    composite: DualMorphism,
    codomain: &DualSpace,
) {
    match star_compose(&first, &second, codomain) {
        Ok(lhs) => t.equal(
            instance,
            "functor-laws.composition-preserved",
            &lhs,
            &composite,
        ),
        Err(e) => t.fail(
            instance(),
            "functor-laws.composition-preserved",
            vec![e.to_string()],
        ),
    }
}

fn kind_category(kind: NaturalKind) -> Category {
    match kind {
        NaturalKind::Epsilon | NaturalKind::Kappa => Category::Dh,
        NaturalKind::Zeta => Category::Gvg,
        NaturalKind::Eta => Category::Hg,
        NaturalKind::Theta => Category::Urq,
    }
}

fn witness_category(kind: WitnessKind) -> Category {
    match kind {
        WitnessKind::Gamma => Category::Dh,
        WitnessKind::Delta => Category::Gvg,
        WitnessKind::Mu => Category::Hg,
        _ => Category::Urq,
    }
}

fn naturality(n: usize) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::Naturality);
    for a in enumerate_lattices(n.min(COMPONENT_SIZE_LIMIT))? {
        let duals = Duals::of(&a)?;
        for kind in NaturalKind::ALL {
            let space = if kind == NaturalKind::Kappa {
                DualSpace::Dh(e_functor(&a))
            } else {
                duals.space(kind_category(kind))
            };
            let outcome = nat_component(kind, &space).map(|_| None);
            t.check(
                || format!("{kind} component at {}", a.name()),
                "naturality.component-is-isomorphism",
                outcome,
            );
        }
    }
    let family = Family::up_to(n.min(HOM_SIZE_LIMIT))?;
    for (i, j, alpha) in family.homs() {
        let (da, db) = (&family.duals[i], &family.duals[j]);
        let homs = DualHoms::of(&alpha, da, db);
        for kind in [
            NaturalKind::Epsilon,
            NaturalKind::Zeta,
            NaturalKind::Eta,
            NaturalKind::Theta,
        ] {
            let c = kind_category(kind);
            let outcome = check_naturality(kind, &homs.morphism(c), &db.space(c), &da.space(c));
            t.check(
                || format!("{kind} square for {}", hom_name(&alpha)),
                "naturality.square-commutes",
                outcome,
            );
        }
        let (fa, fb) = (da.lattice.filt(), db.lattice.filt());
        let kappa = e_functor_mor(&fb, &fa, &filt_of_hom(&alpha)).and_then(|m| {
            check_naturality(
                NaturalKind::Kappa,
                &DualMorphism::Dh(m),
                &DualSpace::Dh(e_functor(&fb)),
                &DualSpace::Dh(e_functor(&fa)),
            )
        });
        t.check(
            || format!("kappa square for the filter map of {}", hom_name(&alpha)),
            "naturality.square-commutes",
            kappa,
        );
        for kind in WitnessKind::TRIANGLES {
            let c = witness_category(kind);
            let outcome = check_triangle(kind, &homs.morphism(c), &db.space(c), &da.space(c));
            t.check(
                || format!("{kind} triangle for {}", hom_name(&alpha)),
                "naturality.triangle-commutes",
                outcome,
            );
        }
    }
    Ok(t.finish())
}

fn distributive_collapse(n: usize) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::DistributiveCollapse);
    let mut skipped = 0;
    for a in enumerate_lattices(n)? {
        if !a.is_distributive() {
            skipped += 1;
            continue;
        }
        let d = Duals::of(&a)?;
        let (xp, _) = gvg_embeddings(&d.dh);
        let xp_set = Subset::from_indices(a.len(), xp.iter().copied());
        if xp_set == a.prime_filters() {
            t.pass();
        } else {
            t.fail(
                a.name().to_string(),
                "collapse.d-prime-filters-are-prime",
                vec![
                    format!("X_p = {}", xp_set.display_with(d.dh.x().labels())),
                    format!(
                        "prime = {}",
                        a.prime_filters().display_with(d.dh.x().labels())
                    ),
                ],
            );
        }
        // Urquhart points are the maximal pairs of the Hartung space; map
        // each to its filter in Filt(A) and its ideal in Idl(A).
        let (x0, y0) = hg_embeddings(&d.gvg);
        let (_, yp) = gvg_embeddings(&d.dh);
        let pairs: Vec<(usize, usize)> =
            d.hg.maximal_pairs()
                .into_iter()
                .map(|(x, y)| (xp[x0[x]], yp[y0[y]]))
                .collect();
        let filters: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let mut sorted = filters.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let complements = pairs
            .iter()
            .all(|&(f, i)| a.principal_filter(f).complement() == a.principal_ideal(i));
        if d.urq.len() == pairs.len() && sorted == xp && complements {
            t.pass();
        } else {
            t.fail(
                a.name().to_string(),
                "collapse.urquhart-points-are-prime-filters",
                vec![format!(
                    "{} points, {} d-prime filters",
                    d.urq.len(),
                    xp.len()
                )],
            );
        }
        let filt = a.filt();
        let transported = Relation::from_fn(pairs.len(), pairs.len(), |p, q| {
            filt.leq(filters[p], filters[q])
        });
        if d.plo.relation() == &transported {
            t.pass();
        } else {
            t.fail(
                a.name().to_string(),
                "collapse.ploscica-relation-is-inclusion",
                vec![format!(
                    "R = {}",
                    d.plo
                        .relation()
                        .display_with(d.plo.labels(), d.plo.labels())
                )],
            );
        }
    }
    t.notes
        .push(format!("{skipped} non-distributive classes skipped"));
    Ok(t.finish())
}

fn plo_inverse(n: usize) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::PloInverse);
    for a in enumerate_lattices(n)? {
        let d = Duals::of(&a)?;
        let back = functor_p_inv(&functor_p(&d.urq));
        t.check(
            || format!("P⁻¹P on the Urquhart dual of {}", a.name()),
            "plo-inverse.inverse-after-p",
            Ok((back != d.urq).then(|| "P⁻¹(P(U)) differs from U".to_string())),
        );
        let again = functor_p(&functor_p_inv(&d.plo));
        t.check(
            || format!("PP⁻¹ on the Ploščica dual of {}", a.name()),
            "plo-inverse.p-after-inverse",
            Ok((again != d.plo).then(|| "P(P⁻¹(P)) differs from P".to_string())),
        );
    }
    Ok(t.finish())
}

/// First subset pair violating `lhs(A, B) ⟺ rhs(A, B)`.
fn equivalence_defect(
    left_len: usize,
    right_len: usize,
    left_ok: impl Fn(&Subset) -> bool,
    right_ok: impl Fn(&Subset) -> bool,
    lhs: impl Fn(&Subset, &Subset) -> bool,
    rhs: impl Fn(&Subset, &Subset) -> bool,
) -> Option<String> {
    let rights: Vec<Subset> = Subset::all(right_len).filter(|b| right_ok(b)).collect();
    for a in Subset::all(left_len).filter(|a| left_ok(a)) {
        for b in &rights {
            if lhs(&a, b) != rhs(&a, b) {
                return Some(format!(
                    "A = {:?}, B = {:?}",
                    a.iter().collect::<Vec<_>>(),
                    b.iter().collect::<Vec<_>>()
                ));
            }
        }
    }
    None
}

fn modal_algebra(n: usize) -> CliResult<VerifyReport> {
    let mut t = Tally::new(Suite::ModalAlgebra);
    let mut skipped = 0;
    for a in enumerate_lattices(n)? {
        let d = Duals::of(&a)?;
        let relations: [(&str, &Relation); 4] = [
            ("dh", d.dh.relation()),
            ("gvg", d.gvg.relation()),
            ("hg", d.hg.relation()),
            ("plo", d.plo.relation()),
        ];
        for (name, r) in relations {
            let (nl, nr) = (r.left_len(), r.right_len());
            if nl > MODAL_CARRIER_LIMIT || nr > MODAL_CARRIER_LIMIT {
                skipped += 1;
                continue;
            }
            let any = |_: &Subset| true;
            let instance = || format!("{name} relation of {}", a.name());
            t.check(
                instance,
                "modal.black-diamond-left-adjoint-to-box",
                Ok(equivalence_defect(
                    nl,
                    nr,
                    any,
                    any,
                    |x, y| r.black_diamond(x).is_subset(y),
                    |x, y| x.is_subset(&r.boxed(y)),
                )),
            );
            t.check(
                instance,
                "modal.diamond-left-adjoint-to-black-box",
                Ok(equivalence_defect(
                    nr,
                    nl,
                    any,
                    any,
                    |y, x| r.diamond(y).is_subset(x),
                    |y, x| y.is_subset(&r.black_box(x)),
                )),
            );
            t.check(
                instance,
                "modal.antitone-galois",
                Ok(equivalence_defect(
                    nl,
                    nr,
                    any,
                    any,
                    |x, y| x.is_subset(&r.boxed(&y.complement())),
                    |x, y| y.is_subset(&r.black_diamond(x).complement()),
                )),
            );
        }
        let u = &d.urq;
        if u.len() > MODAL_CARRIER_LIMIT {
            skipped += 1;
            continue;
        }
        let (q1, q2) = (u.first_order(), u.second_order());
        let up1 = |c: &Subset| q1.image(c) == *c;
        let up2 = |c: &Subset| q2.image(c) == *c;
        t.check(
            || format!("Urquhart polarities of {}", a.name()),
            "modal.urquhart-antitone-galois",
            Ok(equivalence_defect(
                u.len(),
                u.len(),
                up1,
                up2,
                |c, e| c.is_subset(&u.psi(e)),
                |c, e| e.is_subset(&u.phi(c)),
            )),
        );
        t.check(
            || format!("Urquhart polarities of {}", a.name()),
            "modal.urquhart-polarity-is-disjointness",
            Ok(equivalence_defect(
                u.len(),
                u.len(),
                up1,
                up2,
                |c, e| c.is_subset(&u.psi(e)),
                |c, e| c.is_disjoint(e),
            )),
        );
    }
    if skipped > 0 {
        t.notes.push(format!(
            "{skipped} relations above {MODAL_CARRIER_LIMIT} points skipped"
        ));
    }
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(max_size: usize) -> VerifyOptions {
        VerifyOptions { max_size, seed: 0 }
    }

    #[test]
    fn trivial_size_passes_every_suite() {
        for report in run_suite(Suite::All, opts(1)).unwrap() {
            assert!(report.is_ok(), "{report}");
        }
    }

    #[test]
    fn roundtrip_counts_instances() {
        let report = &run_suite(Suite::Roundtrip, opts(4)).unwrap()[0];
        assert_eq!((report.attempted, report.passed), (5 * 7, 5 * 7));
        assert_eq!(report.to_string(), "roundtrip: 35/35 passed");
    }

    #[test]
    fn bounds_are_enforced_unless_overridden() {
        assert!(matches!(
            check_bound(7, VERIFY_SIZE_LIMIT, false),
            Err(CliError::BoundTooLarge { .. })
        ));
        assert!(check_bound(7, VERIFY_SIZE_LIMIT, true).is_ok());
    }

    #[test]
    fn reports_are_deterministic() {
        let first = serde_json::to_string(&run_suite(Suite::Validators, opts(3)).unwrap()).unwrap();
        let second =
            serde_json::to_string(&run_suite(Suite::Validators, opts(3)).unwrap()).unwrap();
        assert_eq!(first, second);
    }
}
