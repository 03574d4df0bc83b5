//! Quasi-stability and stability against their definitions, and the search
//! for nontrivial Mathieu subspaces.

use super::{all_subspaces, enumerate_all_mathieu, subspace_count, task, CatalogEntry, Context, Outcome, Task};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kernel::{FpAlgebra, FpSpace, PowerTable};
use crate::mathieu::{
    decide_mathieu, find_nontrivial_mathieu, is_quasi_stable, is_stable, line_is_mathieu, oracle_on_table,
};
use crate::scan::ScanConfig;
use crate::subspace::{theta_ideal, Subspace, ThetaVariant};

/// Definition-level checks run on algebras with at most this many
/// subspaces.
const DEFINITION_UP_TO: u128 = 2000;
/// Lattice checks run on algebras with at most this many subspaces.
const LATTICE_UP_TO: u128 = 300;

const QUASI_STABLE: [(&str, bool); 6] = [
    ("F_4/F_2", true),
    ("F_2+F_2", true),
    ("F_2[t]/(t^3)", true),
    ("F_3[t]/(t^2+1)", true),
    ("F_3+F_3", true),
    ("M_2(F_2)", false),
];

const STABLE: [(&str, bool); 3] = [("F_3", true), ("F_2+F_2", true), ("F_3+F_3", false)];

fn find<'a>(ctx: &'a Context<'_>, name: &str) -> Result<&'a CatalogEntry> {
    ctx.catalog
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Inconsistent(format!("{name} missing from the catalog")))
}

fn expected<'a>(
    ctx: &'a Context<'a>,
    table: &[(&'static str, bool)],
    verdict: fn(&Algebra, &ScanConfig) -> Result<bool>,
) -> Vec<Task<'a>> {
    table
        .iter()
        .map(|&(name, want)| {
            task("expected", name, move || {
                let mut o = Outcome::new();
                let got = verdict(&find(ctx, name)?.algebra, &ctx.cfg)?;
                o.expect(got == want, || format!("got {got}, expected {want}"));
                Ok(o)
            })
        })
        .collect()
}

fn avoiding_one(alg: &Algebra, cfg: &ScanConfig) -> Result<Vec<Subspace>> {
    let one = alg.one();
    Ok(all_subspaces(alg, cfg)?.into_iter().filter(|v| !v.member(&one)).collect())
}

pub(super) fn quasi_stable_tasks<'a>(ctx: &'a Context<'a>) -> Result<Vec<Task<'a>>> {
    let mut out = expected(ctx, &QUASI_STABLE, is_quasi_stable);
    for entry in ctx.catalog.iter().filter(|e| subspace_count(&e.algebra) <= DEFINITION_UP_TO) {
        let alg = &entry.algebra;
        let cfg = ctx.cfg;
        out.push(task("definition", entry.name.clone(), move || quasi_stable_definition(alg, &cfg)));
    }
    Ok(out)
}

/// Every subspace avoiding 1 is Mathieu for every θ; in dimension at most 2
/// each verdict is also taken from the element-wise definition.
fn quasi_stable_definition(alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let with_oracle = alg.dim() <= 2;
    let k = FpAlgebra::new(alg)?;
    let table = if with_oracle { Some(PowerTable::new(&k, cfg)?) } else { None };
    let mut counterexample = None;
    for v in avoiding_one(alg, cfg)? {
        for theta in ThetaVariant::ALL {
            let d = decide_mathieu(alg, &v, theta, cfg)?.is_mathieu;
            if let Some(table) = &table {
                let s = FpSpace::new(&v)?;
                let oracle = oracle_on_table(&k, table, &s, &table.membership(&s), theta, cfg);
                o.expect(d == oracle, || format!("V = {v}, θ = {theta}: decide {d}, oracle {oracle}"));
            }
            if !d && counterexample.is_none() {
                counterexample = Some(format!("V = {v} is not {theta}-Mathieu"));
            }
        }
    }
    let claimed = is_quasi_stable(alg, cfg)?;
    o.expect(claimed == counterexample.is_none(), || {
        format!("is_quasi_stable = {claimed}; {}", counterexample.clone().unwrap_or("no counterexample".into()))
    });
    Ok(o)
}

pub(super) fn stable_tasks<'a>(ctx: &'a Context<'a>) -> Result<Vec<Task<'a>>> {
    let mut out = expected(ctx, &STABLE, is_stable);
    for entry in ctx.catalog.iter().filter(|e| subspace_count(&e.algebra) <= DEFINITION_UP_TO) {
        let alg = &entry.algebra;
        let cfg = ctx.cfg;
        out.push(task("definition", entry.name.clone(), move || stable_definition(alg, &cfg)));
    }
    Ok(out)
}

/// For each θ, every subspace avoiding 1 is a θ-ideal: it contains the
/// θ-ideal generated by each of its basis vectors.
fn stable_definition(alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let claimed = is_stable(alg, cfg)?;
    let spaces = avoiding_one(alg, cfg)?;
    for theta in ThetaVariant::ALL {
        let counterexample =
            spaces.iter().find(|v| v.basis_elements().iter().any(|b| !theta_ideal(alg, b, theta).is_subspace_of(v)));
        o.expect(claimed == counterexample.is_none(), || {
            let why = counterexample
                .map_or("every such subspace is an ideal".to_string(), |v| format!("V = {v} is not a {theta}-ideal"));
            format!("is_stable = {claimed}; {why}")
        });
    }
    Ok(o)
}

pub(super) fn strongly_simple_tasks<'a>(ctx: &'a Context<'a>) -> Vec<Task<'a>> {
    let mut out = Vec::new();
    for entry in ctx.small_fields() {
        let alg = &entry.algebra;
        let cfg = ctx.cfg;
        out.push(task("nontrivial_mathieu", entry.name.clone(), move || nontrivial_mathieu(alg, &cfg)));
        if subspace_count(alg) <= LATTICE_UP_TO {
            out.push(task("lattice", entry.name.clone(), move || lattice(alg, &cfg)));
        }
    }
    out
}

fn nontrivial_mathieu(alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    match find_nontrivial_mathieu(alg, cfg) {
        Ok(v) => {
            let ok = decide_mathieu(alg, &v, ThetaVariant::TwoSided, cfg)?.is_mathieu;
            o.expect(alg.dim() >= 2, || format!("found {v} in dimension 1"));
            o.expect(ok && !v.is_zero() && !v.is_whole(), || format!("{v} is trivial or not Mathieu"));
        }
        Err(Error::OnlyTrivial) => o.expect(alg.dim() == 1, || "OnlyTrivial in dimension at least 2".into()),
        Err(e) => return Err(e),
    }
    Ok(o)
}

/// The exhaustive two-sided lattice: its lines are those of the line rule,
/// and nontrivial members exist exactly in dimension at least 2.
fn lattice(alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let theta = ThetaVariant::TwoSided;
    let report = enumerate_all_mathieu(alg, theta, cfg)?;
    for line in super::all_subspaces(alg, cfg)?.into_iter().filter(|v| v.dim() == 1) {
        let rule = line_is_mathieu(alg, &line.basis_elements()[0], theta)?;
        let listed = report.all.contains(&line);
        o.expect(rule == listed, || format!("line {line}: rule {rule}, lattice {listed}"));
    }
    let nontrivial = report.all.iter().any(|v| !v.is_zero() && !v.is_whole());
    o.expect(nontrivial == (alg.dim() >= 2), || format!("nontrivial Mathieu subspaces present: {nontrivial}"));
    Ok(o)
}
