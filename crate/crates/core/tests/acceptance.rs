//! Acceptance criteria, one PASS/FAIL line each. A criterion passes when
//! every case agrees exactly and the wall-clock time stays in budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mathieu_core::experiments::{run_suite, SuiteName, SuiteReport, DEFAULT_SEED};
use mathieu_core::mathieu::{decide_mathieu, oracle_mathieu};
use mathieu_core::matrixlab::{classify_codim1, Codim1Strategy};
use mathieu_core::subspace::enumerate_subspaces;
use mathieu_core::{Algebra, Element, FieldSpec, Poly, ScanConfig, Subspace, ThetaVariant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn f(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn field_algebra(p: u64) -> Algebra {
    Algebra::matrix(1, f(p)).unwrap()
}

/// Every element of a finite-field algebra.
fn elements(alg: &Algebra) -> Vec<Element> {
    let q = alg.field().order().unwrap() as i64;
    let d = alg.dim();
    let mut out = Vec::new();
    let mut coords = vec![0i64; d];
    loop {
        out.push(alg.from_i64s(&coords).unwrap());
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < q {
                break;
            }
            coords[i] = 0;
        }
    }
}

fn suite_detail(report: &SuiteReport, checks: &[&str]) -> Verdict {
    let chosen: Vec<_> =
        report.checks.iter().filter(|c| checks.is_empty() || checks.contains(&c.check.as_str())).collect();
    let failed: Vec<String> = chosen
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}/{}: {}", c.check, c.instance, c.witness.clone().unwrap_or_default()))
        .collect();
    let cases: u64 = chosen.iter().map(|c| c.cases).sum();
    if chosen.is_empty() {
        return verdict(false, "no checks ran");
    }
    if failed.is_empty() {
        verdict(true, format!("{} checks, {cases} cases", chosen.len()))
    } else {
        verdict(false, failed.join("; "))
    }
}

fn run(name: SuiteName, checks: &[&str]) -> Verdict {
    match run_suite(name, DEFAULT_SEED, &ScanConfig::default()) {
        Ok(report) => suite_detail(&report, checks),
        Err(e) => verdict(false, format!("suite {name} failed: {e}")),
    }
}

fn codim1() -> Verdict {
    let cfg = ScanConfig::default();
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, q, expected) in [(2, 3, 1), (2, 5, 1), (3, 5, 1), (2, 2, 0), (3, 2, 0), (3, 3, 0)] {
        let report = match classify_codim1(n, q, Codim1Strategy::Auto, &cfg) {
            Ok(r) => r,
            Err(e) => return verdict(false, format!("({n},{q}): {e}")),
        };
        let alg = Algebra::matrix(n, f(q)).unwrap();
        let counts: Vec<u64> = ThetaVariant::ALL.iter().map(|&t| report.per_theta.get(t)).collect();
        let reps_ok =
            if expected == 1 { report.representatives == vec![alg.one()] } else { report.representatives.is_empty() };
        let here = counts.iter().all(|&c| c == expected) && reps_ok;
        ok &= here;
        notes.push(format!("({n},{q}) {:?} {counts:?}/{}", report.strategy, report.total));
    }
    verdict(ok, notes.join(", "))
}

fn oracle_equivalence() -> Verdict {
    let cfg = ScanConfig::default();
    let poly = |p: u64, c: &[i64]| Algebra::poly_quotient(&Poly::from_i64s(f(p), c)).unwrap();
    let sets: Vec<(Algebra, usize)> = vec![
        (Algebra::direct_sum(&field_algebra(2), &field_algebra(2)).unwrap(), 2),
        (poly(2, &[0, 0, 1]), 2),
        (poly(2, &[0, 0, 0, 1]), 3),
        (poly(2, &[1, 1, 1]), 2),
        (Algebra::matrix(2, f(2)).unwrap(), 2),
    ];
    let mut cases = 0;
    for (alg, max_dim) in &sets {
        for r in 0..=*max_dim {
            for v in enumerate_subspaces(alg, r, &cfg).unwrap() {
                for theta in ThetaVariant::ALL {
                    let d = decide_mathieu(alg, &v, theta, &cfg).unwrap().is_mathieu;
                    let o = oracle_mathieu(alg, &v, theta, &cfg).unwrap();
                    if d != o {
                        return verdict(
                            false,
                            format!("{}: V = {v}, θ = {theta}: decide {d}, oracle {o}", alg.label()),
                        );
                    }
                    cases += 1;
                }
            }
        }
    }
    verdict(true, format!("{cases} (subspace, θ) pairs agree"))
}

/// The idempotent `p(a)` and its defining identities, checked from scratch.
fn check_p_of_a(alg: &Algebra, a: &Element) -> Result<(), String> {
    let (mp, p) = alg.idempotent_polynomial(a).map_err(|e| format!("a = {a}: {e}"))?;
    let pa = alg.build_p_of_a(a).map_err(|e| e.to_string())?;
    let fail = |what: &str| Err(format!("a = {a}, p(a) = {pa}: {what}"));
    if !alg.eval_poly(&mp.minpoly, a).is_zero() {
        return fail("minimal polynomial does not annihilate a");
    }
    if mp.minpoly != Poly::monomial(alg.field().one(), mp.k).mul(&mp.h) || mp.h.coeff(0).is_zero() {
        return fail("minimal polynomial is not t^k h with h(0) != 0");
    }
    if alg.eval_poly(&p, a) != pa || !p.coeff(0).is_zero() {
        return fail("p(t) has a constant term or does not evaluate to p(a)");
    }
    if alg.mul(&pa, &pa) != pa || pa.is_zero() || pa == alg.one() {
        return fail("not a nontrivial idempotent");
    }
    let ak = alg.pow(a, mp.k as u64);
    if alg.mul(&ak, &pa) != ak {
        return fail("a^k != a^k p(a)");
    }
    if !alg.mul(&alg.eval_poly(&mp.h, a), &pa).is_zero() {
        return fail("h(a) p(a) != 0");
    }
    let powers: Vec<Element> = (1..=mp.degree() as u64).map(|m| alg.pow(a, m)).collect();
    if !Subspace::span(alg, &powers).unwrap().member(&pa) {
        return fail("p(a) outside the span of positive powers");
    }
    Ok(())
}

fn p_of_a() -> Verdict {
    let mut cases = 0;
    let finite = [
        Algebra::matrix(2, f(3)).unwrap(),
        Algebra::matrix(2, f(5)).unwrap(),
        Algebra::poly_quotient(&Poly::from_i64s(f(2), &[0, 0, 0, 1])).unwrap(),
    ];
    for alg in &finite {
        for a in elements(alg) {
            let mp = alg.minimal_polynomial(&a);
            if mp.is_nilpotent() || mp.is_invertible() {
                continue;
            }
            if let Err(e) = check_p_of_a(alg, &a) {
                return verdict(false, format!("{}: {e}", alg.label()));
            }
            cases += 1;
        }
    }
    let m3 = Algebra::matrix(3, FieldSpec::RATIONALS).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut rational = 0;
    while rational < 100 {
        // a singular matrix: the last row combines the first two
        let mut c: Vec<i64> = (0..6).map(|_| rng.gen_range(-3..=3)).collect();
        let (s, t) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let last: Vec<i64> = (0..3).map(|j| s * c[j] + t * c[3 + j]).collect();
        c.extend(last);
        let a = m3.from_i64s(&c).unwrap();
        let mp = m3.minimal_polynomial(&a);
        if mp.is_nilpotent() || mp.is_invertible() {
            continue;
        }
        if let Err(e) = check_p_of_a(&m3, &a) {
            return verdict(false, format!("M_3(Q): {e}"));
        }
        rational += 1;
        cases += 1;
    }
    verdict(true, format!("{cases} elements"))
}

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 codim1 classification", 60, codim1),
        ("2 oracle equivalence", 30, oracle_equivalence),
        ("3 radical window", 30, || run(SuiteName::RadicalLaws, &["window_vs_cycle"])),
        ("4 p(a) construction", 20, p_of_a),
        ("5 line classification", 10, || run(SuiteName::Lines, &["counts", "oracle"])),
        ("6 quasi-stable and stable", 10, || {
            let a = run(SuiteName::QuasiStable, &[]);
            let b = run(SuiteName::Stable, &[]);
            verdict(a.ok && b.ok, format!("quasi_stable: {}; stable: {}", a.detail, b.detail))
        }),
        ("7 nontrivial Mathieu subspaces", 5, || run(SuiteName::StronglySimple, &["nontrivial_mathieu"])),
        ("8 radical and closure laws", 60, || {
            let a = run(
                SuiteName::RadicalLaws,
                &["radical_of_radical", "mathieu_radical_is_ideal_radical", "idempotent_dichotomy", "certificate"],
            );
            let b = run(SuiteName::ClosureLaws, &[]);
            verdict(a.ok && b.ok, format!("radical: {}; closure: {}", a.detail, b.detail))
        }),
    ];
    let mut all = true;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let v = check();
        let took = start.elapsed();
        let in_budget = took <= Duration::from_secs(budget);
        let ok = v.ok && in_budget;
        all &= ok;
        let timing = if in_budget { String::new() } else { format!(" over the {budget} s budget") };
        println!("{} {name} ({:.2} s{timing}): {}", if ok { "PASS" } else { "FAIL" }, took.as_secs_f64(), v.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
