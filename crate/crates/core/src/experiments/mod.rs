//! Scripted checks of the theory on a fixed catalog of small algebras.
//!
//! Every check recomputes its claim from the definitions in this crate and
//! compares; nothing is taken from the expected answer. A suite is a list of
//! checks, each run on one instance, reported as JSON lines sorted by
//! `(check, instance)`.

mod catalog;
mod closure;
mod criteria;
mod lattice;
mod radical;
mod stability;

pub use catalog::{catalog, CatalogEntry, Tag};
pub use lattice::{enumerate_all_mathieu, LatticeReport};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scan::ScanConfig;
use crate::subspace::{enumerate_subspaces, gaussian_binomial, Subspace};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    RadicalLaws,
    IdempotentCriterion,
    Codim1,
    Lines,
    QuasiStable,
    Stable,
    StronglySimple,
    ClosureLaws,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::RadicalLaws,
        SuiteName::IdempotentCriterion,
        SuiteName::Codim1,
        SuiteName::Lines,
        SuiteName::QuasiStable,
        SuiteName::Stable,
        SuiteName::StronglySimple,
        SuiteName::ClosureLaws,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::RadicalLaws => "radical_laws",
            SuiteName::IdempotentCriterion => "idempotent_criterion",
            SuiteName::Codim1 => "codim1",
            SuiteName::Lines => "lines",
            SuiteName::QuasiStable => "quasi_stable",
            SuiteName::Stable => "stable",
            SuiteName::StronglySimple => "strongly_simple",
            SuiteName::ClosureLaws => "closure_laws",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One line of a suite report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: SuiteName,
    pub check: String,
    pub instance: String,
    pub pass: bool,
    /// Number of cases the check examined.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One JSON object per check, newline separated.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("check results serialize"));
            out.push('\n');
        }
        out
    }
}

/// Running tally of one check: the first failure is kept as the witness.
#[derive(Debug)]
pub(crate) struct Outcome {
    pass: bool,
    cases: u64,
    witness: Option<String>,
}

impl Outcome {
    pub(crate) fn new() -> Self {
        Outcome { pass: true, cases: 0, witness: None }
    }

    pub(crate) fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.pass {
            self.pass = false;
            self.witness = Some(witness());
        }
    }
}

type CheckFn<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

pub(crate) struct Task<'a> {
    check: &'static str,
    instance: String,
    run: CheckFn<'a>,
}

pub(crate) fn task<'a>(
    check: &'static str,
    instance: impl Into<String>,
    run: impl Fn() -> Result<Outcome> + Send + Sync + 'a,
) -> Task<'a> {
    Task { check, instance: instance.into(), run: Box::new(run) }
}

/// Shared inputs of every suite.
pub(crate) struct Context<'a> {
    pub catalog: &'a [CatalogEntry],
    pub seed: u64,
    pub cfg: ScanConfig,
}

impl Context<'_> {
    /// Catalog entries over `F_2` and `F_3`.
    pub fn small_fields(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.catalog.iter().filter(|e| e.q() <= 3)
    }

    /// A generator seeded from the suite seed and an instance name, so each
    /// check draws the same sample whatever the schedule.
    pub fn rng(&self, instance: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(instance.as_bytes()))
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Number of subspaces of every dimension.
pub(crate) fn subspace_count(alg: &Algebra) -> u128 {
    let q = alg.field().order().unwrap_or(u64::MAX);
    (0..=alg.dim()).map(|r| gaussian_binomial(alg.dim(), r, q)).sum()
}

/// Every subspace, by dimension and then in enumeration order.
pub(crate) fn all_subspaces(alg: &Algebra, cfg: &ScanConfig) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for r in 0..=alg.dim() {
        out.extend(enumerate_subspaces(alg, r, cfg)?);
    }
    Ok(out)
}

/// The span of `r` random vectors, with `r` uniform in `0..=dim`.
pub(crate) fn random_subspace(alg: &Algebra, rng: &mut ChaCha8Rng) -> Subspace {
    let d = alg.dim();
    let r = rng.gen_range(0..=d);
    let vectors: Vec<_> = (0..r).map(|_| random_element(alg, rng)).collect();
    Subspace::span(alg, &vectors).expect("vectors of the algebra")
}

pub(crate) fn random_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> crate::algebra::Element {
    let q = alg.field().order().expect("finite field") as i64;
    let coords: Vec<i64> = (0..alg.dim()).map(|_| rng.gen_range(0..q)).collect();
    alg.from_i64s(&coords).expect("coordinates in range")
}

/// All subspaces when there are at most `all_up_to` of them, otherwise
/// `samples` random ones.
pub(crate) fn subspace_sample(
    ctx: &Context<'_>,
    alg: &Algebra,
    all_up_to: u128,
    samples: usize,
) -> Result<Vec<Subspace>> {
    if subspace_count(alg) <= all_up_to {
        return all_subspaces(alg, &ctx.cfg);
    }
    let mut rng = ctx.rng(alg.label());
    Ok((0..samples).map(|_| random_subspace(alg, &mut rng)).collect())
}

/// Runs every check of a suite.
///
/// A check that hits a scan limit aborts the suite with
/// [`Error::TooLarge`] naming the check; any other error fails that check
/// with the error as its witness.
pub fn run_suite(name: SuiteName, seed: u64, cfg: &ScanConfig) -> Result<SuiteReport> {
    let catalog = catalog(cfg)?;
    let ctx = Context { catalog: &catalog, seed, cfg: *cfg };
    let tasks = match name {
        SuiteName::RadicalLaws => radical::tasks(&ctx)?,
        SuiteName::ClosureLaws => closure::tasks(&ctx)?,
        SuiteName::IdempotentCriterion => criteria::idempotent_tasks(&ctx)?,
        SuiteName::Codim1 => criteria::codim1_tasks(&ctx),
        SuiteName::Lines => criteria::lines_tasks(&ctx),
        SuiteName::QuasiStable => stability::quasi_stable_tasks(&ctx)?,
        SuiteName::Stable => stability::stable_tasks(&ctx)?,
        SuiteName::StronglySimple => stability::strongly_simple_tasks(&ctx),
    };
    let ran = cfg.map_items(&tasks, |t| {
        let start = Instant::now();
        let outcome = (t.run)();
        (outcome, start.elapsed().as_millis() as u64)
    });
    let mut checks = Vec::with_capacity(tasks.len());
    for (t, (outcome, millis)) in tasks.iter().zip(ran) {
        let (pass, cases, witness) = match outcome {
            Ok(o) => (o.pass, o.cases, o.witness),
            Err(Error::TooLarge { what, count, limit }) => {
                let what = format!("{} on {}: {what}", t.check, t.instance);
                return Err(Error::TooLarge { what, count, limit });
            }
            Err(e) => (false, 0, Some(format!("error: {e}"))),
        };
        checks.push(CheckResult {
            suite: name,
            check: t.check.to_string(),
            instance: t.instance.clone(),
            pass,
            cases,
            witness,
            millis,
            seed,
        });
    }
    checks.sort_by(|a, b| (&a.check, &a.instance).cmp(&(&b.check, &b.instance)));
    Ok(SuiteReport { suite: name, seed, checks })
}
