//! The idempotent criterion against the definition, hyperplanes of matrix
//! algebras, and lines of matrix algebras.

use std::sync::Arc;

use super::{
    enumerate_all_mathieu, random_element, subspace_count, subspace_sample, task, CatalogEntry, Context, Outcome, Task,
};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::kernel::{FpAlgebra, FpSpace, PowerTable};
use crate::mathieu::{decide_mathieu, is_mathieu_commutative, line_is_mathieu, oracle_on_table, verify_witness};
use crate::matrixlab::{
    check_proper_subspace_criterion, classify_codim1, classify_lines, h_subspace, mathieu_hyperplanes, trace_dual,
    witness_idempotents, Codim1Strategy, TraceDual,
};
use crate::scan::ScanConfig;
use crate::subspace::{enumerate_subspaces, gaussian_binomial, theta_ideal, Subspace, ThetaVariant};

/// Every subspace is checked when there are at most this many.
const ALL_UP_TO: u128 = 300;
const SAMPLES: usize = 12;
const LINES_UP_TO: u128 = 20_000;

pub(super) const CODIM1_PAIRS: [(usize, u64); 6] = [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (3, 5)];
const LINE_PAIRS: [(usize, u64); 2] = [(2, 2), (2, 3)];

/// Sampled subspaces, plus `H_I` and `H_{E_12}` in matrix algebras.
fn criterion_sample(ctx: &Context<'_>, entry: &CatalogEntry) -> Result<Vec<Subspace>> {
    let alg = &entry.algebra;
    let mut spaces = subspace_sample(ctx, alg, ALL_UP_TO, SAMPLES)?;
    if subspace_count(alg) > ALL_UP_TO && alg.matrix_order().is_some() {
        spaces.push(h_subspace(alg, &alg.one())?);
        spaces.push(h_subspace(alg, &alg.basis(1))?);
    }
    Ok(spaces)
}

pub(super) fn idempotent_tasks<'a>(ctx: &'a Context<'a>) -> Result<Vec<Task<'a>>> {
    let mut out = Vec::new();
    for entry in ctx.small_fields() {
        let alg = &entry.algebra;
        let name = entry.name.clone();
        let cfg = ctx.cfg;
        let spaces = Arc::new(criterion_sample(ctx, entry)?);
        let s = spaces.clone();
        out.push(task("oracle_equivalence", name.clone(), move || oracle_equivalence(alg, &s, &cfg)));
        let s = spaces.clone();
        out.push(task("witness_replay", name.clone(), move || witness_replay(alg, &s, &cfg)));
        if gaussian_binomial(alg.dim(), 1, entry.q()) <= LINES_UP_TO {
            out.push(task("line_rule", name.clone(), move || line_rule(alg, &cfg)));
        }
        if alg.is_commutative() {
            let s = spaces.clone();
            out.push(task("commutative_radical", name.clone(), move || commutative_radical(alg, &s, &cfg)));
        }
        if alg.matrix_order().is_some() {
            out.push(task("proper_subspaces", name.clone(), move || proper_subspaces(alg, &spaces, &cfg)));
        }
    }
    Ok(out)
}

fn oracle_equivalence(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let k = FpAlgebra::new(alg)?;
    let table = PowerTable::new(&k, cfg)?;
    for v in spaces {
        let s = FpSpace::new(v)?;
        let member = table.membership(&s);
        for theta in ThetaVariant::ALL {
            let d = decide_mathieu(alg, v, theta, cfg)?.is_mathieu;
            let oracle = oracle_on_table(&k, &table, &s, &member, theta, cfg);
            o.expect(d == oracle, || format!("V = {v}, θ = {theta}: decide {d}, oracle {oracle}"));
        }
    }
    Ok(o)
}

fn witness_replay(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for v in spaces {
        for theta in ThetaVariant::ALL {
            let verdict = decide_mathieu(alg, v, theta, cfg)?;
            if let Some(w) = &verdict.witness {
                let ok = verify_witness(alg, v, theta, w)?;
                o.expect(ok, || format!("V = {v}, θ = {theta}: witness e = {} does not replay", w.e));
            }
        }
    }
    Ok(o)
}

fn line_rule(alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for line in enumerate_subspaces(alg, 1, cfg)? {
        let a = &line.basis_elements()[0];
        for theta in ThetaVariant::ALL {
            let rule = line_is_mathieu(alg, a, theta)?;
            let d = decide_mathieu(alg, &line, theta, cfg)?.is_mathieu;
            o.expect(rule == d, || format!("line {line}, θ = {theta}: line rule {rule}, scan {d}"));
        }
    }
    Ok(o)
}

fn commutative_radical(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for v in spaces {
        let rad = is_mathieu_commutative(alg, v, cfg)?;
        let d = decide_mathieu(alg, v, ThetaVariant::TwoSided, cfg)?.is_mathieu;
        o.expect(rad == d, || format!("V = {v}: radical test {rad}, scan {d}"));
    }
    Ok(o)
}

fn proper_subspaces(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for v in spaces.iter().filter(|v| !v.is_whole()) {
        match check_proper_subspace_criterion(alg, v, cfg) {
            Ok(_) => o.expect(true, String::new),
            Err(Error::Inconsistent(msg)) => o.expect(false, || format!("V = {v}: {msg}")),
            Err(e) => return Err(e),
        }
    }
    Ok(o)
}

fn matrix(n: usize, q: u64) -> Result<Algebra> {
    Ok(Algebra::matrix(n, FieldSpec::prime(q)?)?.with_label(format!("M_{n}(F_{q})")))
}

pub(super) fn codim1_tasks<'a>(ctx: &'a Context<'a>) -> Vec<Task<'a>> {
    let mut out = Vec::new();
    for (n, q) in CODIM1_PAIRS {
        let name = format!("M_{n}(F_{q})");
        let cfg = ctx.cfg;
        out.push(task("classes", name.clone(), move || codim1_classes(n, q, &cfg)));
        out.push(task("witness_properties", name.clone(), move || witness_properties(ctx, n, q)));
        out.push(task("pairing", name.clone(), move || pairing(ctx, n, q)));
        if n == 2 {
            out.push(task("hyperplane_scan", name.clone(), move || hyperplane_scan(n, q, &cfg)));
            out.push(task("strategies_agree", name, move || strategies_agree(n, q, &cfg)));
        }
    }
    out
}

/// One Mathieu class (that of `I`) when `q > n`, none otherwise.
fn expected_classes(alg: &Algebra, n: usize, q: u64) -> Vec<Element> {
    if q as usize > n {
        vec![alg.one()]
    } else {
        Vec::new()
    }
}

fn codim1_classes(n: usize, q: u64, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let alg = matrix(n, q)?;
    let report = classify_codim1(n, q, Codim1Strategy::Auto, cfg)?;
    let expected = expected_classes(&alg, n, q);
    for theta in ThetaVariant::ALL {
        let got = report.per_theta.get(theta);
        o.expect(got == expected.len() as u64, || {
            format!("θ = {theta}: {got} Mathieu classes of {}, expected {}", report.total, expected.len())
        });
    }
    o.expect(report.representatives == expected, || {
        let reps: Vec<String> = report.representatives.iter().map(|x| x.to_string()).collect();
        format!("Mathieu classes {reps:?}")
    });
    Ok(o)
}

fn hyperplane_scan(n: usize, q: u64, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let alg = matrix(n, q)?;
    let expected: Vec<Subspace> =
        expected_classes(&alg, n, q).iter().map(|x| h_subspace(&alg, x)).collect::<Result<_>>()?;
    for theta in ThetaVariant::ALL {
        let found = mathieu_hyperplanes(&alg, theta, cfg)?;
        o.expect(found == expected, || {
            let found: Vec<String> = found.iter().map(|v| v.to_string()).collect();
            format!("θ = {theta}: Mathieu hyperplanes {found:?}")
        });
    }
    Ok(o)
}

fn strategies_agree(n: usize, q: u64, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let a = classify_codim1(n, q, Codim1Strategy::Exhaustive, cfg)?;
    let b = classify_codim1(n, q, Codim1Strategy::Witness, cfg)?;
    o.expect(a.per_theta == b.per_theta && a.representatives == b.representatives, || {
        format!("exhaustive {:?} vs witness {:?}", a.per_theta, b.per_theta)
    });
    Ok(o)
}

/// Every `X` for `n = 2`, a random sample for `n = 3`, skipping zero.
fn dual_sample(ctx: &Context<'_>, alg: &Algebra, what: &str) -> Vec<Element> {
    const SAMPLED: usize = 300;
    let q = alg.field().order().expect("finite field");
    let total = q.pow(alg.dim() as u32);
    if total <= 1 << 12 {
        let k = FpAlgebra::new(alg).expect("finite field");
        return (1..total as usize).map(|i| k.to_element(&k.element_at(i))).collect();
    }
    let mut rng = ctx.rng(&format!("{} {what}", alg.label()));
    (0..SAMPLED).map(|_| random_element(alg, &mut rng)).filter(|x| !x.is_zero()).collect()
}

/// `A`, `B` are nontrivial idempotents in `H_X` with `AX ≠ 0`, `XB ≠ 0`, and
/// their ideals leave `H_X`: `A` for left, pre-two-sided and two-sided, `B`
/// for right. Checked in exact arithmetic, independent of the residue
/// kernel used by the classifier.
fn witness_properties(ctx: &Context<'_>, n: usize, q: u64) -> Result<Outcome> {
    let mut o = Outcome::new();
    let alg = matrix(n, q)?;
    for x in dual_sample(ctx, &alg, "witness") {
        if TraceDual::of(&alg, &x)?.is_scalar(&alg) {
            continue;
        }
        let (a, b) = witness_idempotents(&alg, &x)?;
        let h = h_subspace(&alg, &x)?;
        let one = alg.one();
        let nontrivial = |e: &Element| alg.is_idempotent(e) && !e.is_zero() && *e != one && h.member(e);
        let escapes = ThetaVariant::ALL.into_iter().all(|theta| {
            let e = if theta == ThetaVariant::Right { &b } else { &a };
            !theta_ideal(&alg, e, theta).is_subspace_of(&h)
        });
        let ok =
            nontrivial(&a) && nontrivial(&b) && !alg.mul(&a, &x).is_zero() && !alg.mul(&x, &b).is_zero() && escapes;
        o.expect(ok, || format!("X = {x}: A = {a}, B = {b}"));
    }
    Ok(o)
}

/// `X ↦ H_X ↦ X` recovers the class of `X`.
fn pairing(ctx: &Context<'_>, n: usize, q: u64) -> Result<Outcome> {
    let mut o = Outcome::new();
    let alg = matrix(n, q)?;
    for x in dual_sample(ctx, &alg, "pairing") {
        let back = trace_dual(&alg, &h_subspace(&alg, &x)?)?;
        let class = TraceDual::of(&alg, &x)?;
        o.expect(back == class, || format!("X = {x}: H_X gives back {back}"));
    }
    Ok(o)
}

pub(super) fn lines_tasks<'a>(ctx: &'a Context<'a>) -> Vec<Task<'a>> {
    let mut out = Vec::new();
    for (n, q) in LINE_PAIRS {
        let name = format!("M_{n}(F_{q})");
        let cfg = ctx.cfg;
        out.push(task("counts", name.clone(), move || line_counts(n, q, &cfg)));
        out.push(task("oracle", name.clone(), move || line_oracle(n, q, &cfg)));
        out.push(task("minimal_mathieu", name, move || minimal_mathieu(n, q, &cfg)));
    }
    out
}

fn line_counts(n: usize, q: u64, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let r = classify_lines(n, q, cfg)?;
    let total = gaussian_binomial(n * n, 1, q) as u64;
    o.expect(r.total_lines == total, || format!("{} lines reported, {total} projective points", r.total_lines));
    for theta in ThetaVariant::ALL {
        let got = r.per_theta.get(theta);
        o.expect(got == r.total_lines - r.quasi_idempotent_lines, || {
            format!(
                "θ = {theta}: {got} Mathieu lines, {} total, {} quasi-idempotent",
                r.total_lines, r.quasi_idempotent_lines
            )
        });
    }
    o.expect(r.equivalence_holds, || "some line is Mathieu exactly when quasi-idempotent".to_string());
    Ok(o)
}

fn line_oracle(n: usize, q: u64, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let alg = matrix(n, q)?;
    let k = FpAlgebra::new(&alg)?;
    let table = PowerTable::new(&k, cfg)?;
    for line in enumerate_subspaces(&alg, 1, cfg)? {
        let a = &line.basis_elements()[0];
        let s = FpSpace::new(&line)?;
        let member = table.membership(&s);
        for theta in ThetaVariant::ALL {
            let rule = line_is_mathieu(&alg, a, theta)?;
            let oracle = oracle_on_table(&k, &table, &s, &member, theta, cfg);
            o.expect(rule == oracle, || format!("line {line}, θ = {theta}: rule {rule}, oracle {oracle}"));
        }
    }
    Ok(o)
}

/// The minimal nonzero Mathieu subspaces are the lines spanned by elements
/// that are not quasi-idempotent.
fn minimal_mathieu(n: usize, q: u64, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let alg = matrix(n, q)?;
    let expected: Vec<Subspace> = enumerate_subspaces(&alg, 1, cfg)?
        .filter(|l| alg.quasi_idempotent_ratio(&l.basis_elements()[0]).is_none())
        .collect();
    for theta in ThetaVariant::ALL {
        let report = enumerate_all_mathieu(&alg, theta, cfg)?;
        let mut got = report.minimal_nonzero.clone();
        got.sort_by(|a, b| a.canonical_cmp(b));
        let mut want = expected.clone();
        want.sort_by(|a, b| a.canonical_cmp(b));
        o.expect(got == want, || {
            format!("θ = {theta}: {} minimal nonzero, {} non-quasi-idempotent lines", got.len(), want.len())
        });
    }
    Ok(o)
}
