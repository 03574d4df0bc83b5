//! `mathieu-kit`: exit code 0 on success, 1 when a check answers "false",
//! 2 on errors.

mod args;
mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::Parser;
use mathieu_core::experiments::{enumerate_all_mathieu, run_suite, SuiteName};
use mathieu_core::json::{
    algebra_to_json, certificate_to_json, element_to_json, field_to_json, lattice_to_json, subspace_to_json,
};
use mathieu_core::mathieu::{
    certify_radical_membership, decide_mathieu, find_nontrivial_mathieu, is_quasi_stable, is_stable, oracle_mathieu,
    radical_enumerate, radical_member, MathieuVerdict,
};
use mathieu_core::matrixlab::{
    classify_codim1, classify_lines, trace_dual, witness_idempotents, Codim1Strategy, PerTheta,
};
use mathieu_core::scan::configure_threads;
use mathieu_core::subspace::{max_theta_ideal, theta_ideal};
use mathieu_core::{Algebra, Element, Error, Poly, Result, ScanConfig, Subspace, ThetaVariant};
use serde_json::{json, Value};

use args::{AlgCmd, AlgebraCmd, Cli, ElemArgs, ElemCmd, Group, MatCmd, SpaceArgs, SpaceCmd, Strategy, SuiteCmd, Theta};

/// What a command prints, and whether it counts as a "true" answer.
struct Output {
    json: String,
    text: String,
    ok: bool,
}

fn doc(value: Value, text: impl Into<String>) -> Output {
    Output { json: pretty(&value), text: text.into(), ok: true }
}

fn answer(ok: bool, value: Value, text: impl Into<String>) -> Output {
    Output { json: pretty(&value), text: text.into(), ok }
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn theta(t: Theta) -> ThetaVariant {
    match t {
        Theta::Left => ThetaVariant::Left,
        Theta::Right => ThetaVariant::Right,
        Theta::PreTwoSided => ThetaVariant::PreTwoSided,
        Theta::TwoSided => ThetaVariant::TwoSided,
    }
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn elements_text(items: &[Element]) -> String {
    items.iter().map(|e| format!("{e}\n")).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = configure_threads(n) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let cfg = ScanConfig::default().with_max_scan(cli.max_scan);
    match dispatch(cli.command, &cfg) {
        Ok(out) => {
            let body = if cli.json { &out.json } else { &out.text };
            print!("{body}");
            if !body.ends_with('\n') {
                println!();
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(group: Group, cfg: &ScanConfig) -> Result<Output> {
    match group {
        Group::Algebra(cmd) => algebra_cmd(cmd),
        Group::Elem(cmd) => elem_cmd(cmd, cfg),
        Group::Space(cmd) => space_cmd(cmd, cfg),
        Group::Mat(cmd) => mat_cmd(cmd, cfg),
        Group::Alg(cmd) => alg_cmd(cmd, cfg),
        Group::Suite(cmd) => suite_cmd(cmd, cfg),
    }
}

fn algebra_cmd(cmd: AlgebraCmd) -> Result<Output> {
    match cmd {
        AlgebraCmd::Validate(a) => {
            let alg = input::algebra(&a.algebra)?;
            alg.verify()?;
            Ok(doc(algebra_to_json(&alg), format!("valid: {alg}")))
        }
        AlgebraCmd::Info(a) => {
            let alg = input::algebra(&a.algebra)?;
            let info = json!({
                "label": alg.label(),
                "field": field_to_json(alg.field()),
                "dim": alg.dim(),
                "commutative": alg.is_commutative(),
                "matrix_order": alg.matrix_order(),
                "unit": element_to_json(&alg.one()),
            });
            let order = alg.matrix_order().map_or("-".to_string(), |n| n.to_string());
            let text = format!(
                "label         {}\nfield         {}\ndim           {}\ncommutative   {}\nmatrix order  {order}\nunit          {}\n",
                alg.label(),
                alg.field(),
                alg.dim(),
                alg.is_commutative(),
                alg.one()
            );
            Ok(doc(info, text))
        }
    }
}

fn elem_input(args: &ElemArgs) -> Result<(Algebra, Element)> {
    let alg = input::algebra(&args.algebra.algebra)?;
    let a = input::element(&alg, &args.elem)?;
    Ok((alg, a))
}

fn elem_cmd(cmd: ElemCmd, _cfg: &ScanConfig) -> Result<Output> {
    match cmd {
        ElemCmd::Minpoly(args) => {
            let (alg, a) = elem_input(&args)?;
            let mp = alg.minimal_polynomial(&a);
            let value = json!({ "minpoly": poly_json(&mp.minpoly), "k": mp.k, "h": poly_json(&mp.h) });
            Ok(doc(value, format!("minpoly  {}\nk        {}\nh        {}\n", mp.minpoly, mp.k, mp.h)))
        }
        ElemCmd::Classify(args) => {
            let (alg, a) = elem_input(&args)?;
            let c = alg.classify_element(&a);
            let ratio = c.quasi_idempotent.as_ref().map(|r| r.to_string());
            let value = json!({
                "nilpotent": c.nilpotent,
                "invertible": c.invertible,
                "idempotent": c.idempotent,
                "quasi_idempotent": ratio,
                "algebraic_degree": c.algebraic_degree,
            });
            let text = format!(
                "nilpotent         {}\ninvertible        {}\nidempotent        {}\nquasi-idempotent  {}\nalgebraic degree  {}\n",
                c.nilpotent,
                c.invertible,
                c.idempotent,
                ratio.map_or("no".to_string(), |r| format!("a^2 = {r} a")),
                c.algebraic_degree
            );
            Ok(doc(value, text))
        }
        ElemCmd::Pofa(args) => {
            let (alg, a) = elem_input(&args)?;
            let p = alg.build_p_of_a(&a)?;
            Ok(doc(element_to_json(&p), p.to_string()))
        }
        ElemCmd::Cycle(args) => {
            let (alg, a) = elem_input(&args)?;
            let c = alg.power_cycle(&a)?;
            let value = json!({ "preperiod": c.preperiod, "period": c.period });
            Ok(doc(value, format!("preperiod  {}\nperiod     {}\n", c.preperiod, c.period)))
        }
    }
}

fn space_input(args: &SpaceArgs) -> Result<(Algebra, Subspace)> {
    let alg = input::algebra(&args.algebra.algebra)?;
    let v = input::subspace(&alg, &args.basis)?;
    Ok((alg, v))
}

fn verdict_output(v: &MathieuVerdict) -> Output {
    let mut text = format!("{}\n", v.is_mathieu);
    if let Some(w) = &v.witness {
        let _ = writeln!(text, "idempotent  {}", w.e);
        if let Some(b) = &w.b {
            let _ = writeln!(text, "b           {b}");
        }
        if let Some(c) = &w.c {
            let _ = writeln!(text, "c           {c}");
        }
        let _ = writeln!(text, "product     {} (outside the subspace)", w.product);
    }
    let value = serde_json::to_value(v).expect("verdicts serialize");
    answer(v.is_mathieu, value, text)
}

fn space_cmd(cmd: SpaceCmd, cfg: &ScanConfig) -> Result<Output> {
    match cmd {
        SpaceCmd::Check { space, theta: t, oracle } => {
            let (alg, v) = space_input(&space)?;
            if oracle {
                let ok = oracle_mathieu(&alg, &v, theta(t), cfg)?;
                let value = json!({ "is_mathieu": ok, "theta": theta(t), "method": "oracle" });
                return Ok(answer(ok, value, ok.to_string()));
            }
            Ok(verdict_output(&decide_mathieu(&alg, &v, theta(t), cfg)?))
        }
        SpaceCmd::RadicalMember { space, elem } => {
            let (alg, v) = space_input(&space)?;
            let a = input::element(&alg, &elem)?;
            let ok = radical_member(&alg, &v, &a)?;
            Ok(answer(ok, json!({ "radical_member": ok }), ok.to_string()))
        }
        SpaceCmd::RadicalEnum { space } => {
            let (alg, v) = space_input(&space)?;
            let rad = radical_enumerate(&alg, &v, cfg)?;
            let value = Value::Array(rad.iter().map(element_to_json).collect());
            Ok(doc(value, format!("{}{} elements\n", elements_text(&rad), rad.len())))
        }
        SpaceCmd::Certify { space, elem, theta: t } => {
            let (alg, v) = space_input(&space)?;
            let a = input::element(&alg, &elem)?;
            match certify_radical_membership(&alg, &v, theta(t), &a, cfg) {
                Ok(cert) => {
                    let text = format!("N      {}\nideal  {}\n", cert.exponent, cert.ideal);
                    Ok(doc(certificate_to_json(&cert), text))
                }
                Err(e @ (Error::NotInRadical | Error::NotMathieu)) => {
                    Ok(answer(false, json!({ "certified": false, "reason": e.to_string() }), format!("false: {e}")))
                }
                Err(e) => Err(e),
            }
        }
        SpaceCmd::MaxIdeal { space, theta: t } => {
            let (alg, v) = space_input(&space)?;
            let ideal = max_theta_ideal(&alg, &v, theta(t))?;
            Ok(doc(subspace_to_json(&alg, &ideal), ideal.to_string()))
        }
        SpaceCmd::ThetaIdeal { elem, theta: t } => {
            let (alg, a) = elem_input(&elem)?;
            let ideal = theta_ideal(&alg, &a, theta(t));
            Ok(doc(subspace_to_json(&alg, &ideal), ideal.to_string()))
        }
    }
}

fn per_theta_text(p: &PerTheta) -> String {
    ThetaVariant::ALL.iter().map(|&t| format!("  {:<15} {}\n", t.as_str(), p.get(t))).collect()
}

fn mat_cmd(cmd: MatCmd, cfg: &ScanConfig) -> Result<Output> {
    match cmd {
        MatCmd::Codim1 { n, q, strategy } => {
            let strategy = match strategy {
                Strategy::Auto => Codim1Strategy::Auto,
                Strategy::Exhaustive => Codim1Strategy::Exhaustive,
                Strategy::Witness => Codim1Strategy::Witness,
            };
            let r = classify_codim1(n, q, strategy, cfg)?;
            let mut text = format!("M_{n}(F_{q}): {} hyperplane classes, strategy {:?}\n", r.total, r.strategy);
            text.push_str("Mathieu classes per variant:\n");
            text.push_str(&per_theta_text(&r.per_theta));
            for x in &r.representatives {
                let _ = writeln!(text, "representative X = {x}");
            }
            Ok(doc(serde_json::to_value(&r).expect("reports serialize"), text))
        }
        MatCmd::Lines { n, q } => {
            let r = classify_lines(n, q, cfg)?;
            let mut text = format!(
                "M_{n}(F_{q}): {} lines, {} quasi-idempotent\nMathieu lines per variant:\n",
                r.total_lines, r.quasi_idempotent_lines
            );
            text.push_str(&per_theta_text(&r.per_theta));
            let _ = writeln!(text, "Mathieu exactly when not quasi-idempotent: {}", r.equivalence_holds);
            Ok(doc(serde_json::to_value(&r).expect("reports serialize"), text))
        }
        MatCmd::Dual(space) => {
            let (alg, v) = space_input(&space)?;
            let x = trace_dual(&alg, &v)?;
            let value = json!({ "x": element_to_json(&x.x), "scalar": x.is_scalar(&alg) });
            Ok(doc(value, format!("X = {x}\n")))
        }
        MatCmd::Witness { algebra, x } => {
            let alg = input::algebra(&algebra.algebra)?;
            let x = input::element(&alg, &x)?;
            let (a, b) = witness_idempotents(&alg, &x)?;
            let value = json!({ "a": element_to_json(&a), "b": element_to_json(&b) });
            Ok(doc(value, format!("A = {a}\nB = {b}\n")))
        }
    }
}

fn alg_cmd(cmd: AlgCmd, cfg: &ScanConfig) -> Result<Output> {
    match cmd {
        AlgCmd::QuasiStable(a) => {
            let ok = is_quasi_stable(&input::algebra(&a.algebra)?, cfg)?;
            Ok(answer(ok, json!({ "quasi_stable": ok }), ok.to_string()))
        }
        AlgCmd::Stable(a) => {
            let ok = is_stable(&input::algebra(&a.algebra)?, cfg)?;
            Ok(answer(ok, json!({ "stable": ok }), ok.to_string()))
        }
        AlgCmd::FindMs(a) => {
            let alg = input::algebra(&a.algebra)?;
            let v = find_nontrivial_mathieu(&alg, cfg)?;
            Ok(doc(subspace_to_json(&alg, &v), v.to_string()))
        }
        AlgCmd::Lattice { algebra, theta: t } => {
            let alg = input::algebra(&algebra.algebra)?;
            let r = enumerate_all_mathieu(&alg, theta(t), cfg)?;
            let mut text = format!("{} {}-Mathieu subspaces\n", r.all.len(), theta(t));
            for (title, list) in
                [("maximal nontrivial", &r.maximal_nontrivial), ("minimal nonzero", &r.minimal_nonzero)]
            {
                let _ = writeln!(text, "{title}:");
                for v in list {
                    let _ = writeln!(text, "  {v}");
                }
            }
            Ok(doc(lattice_to_json(&alg, &r), text))
        }
    }
}

fn suite_cmd(cmd: SuiteCmd, cfg: &ScanConfig) -> Result<Output> {
    let SuiteCmd::Run { name, seed } = cmd;
    let name: SuiteName = name.parse()?;
    let report = run_suite(name, seed, cfg)?;
    let width = report.checks.iter().map(|c| c.check.len()).max().unwrap_or(0);
    let inst = report.checks.iter().map(|c| c.instance.len()).max().unwrap_or(0);
    let mut text = String::new();
    for c in &report.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status}  {:<width$}  {:<inst$}  {:>8} cases  {:>6} ms",
            c.check, c.instance, c.cases, c.millis
        );
        if let Some(w) = &c.witness {
            let _ = writeln!(text, "      {w}");
        }
    }
    let failed = report.failures().count();
    let _ = writeln!(text, "{name}: {} checks, {failed} failed, seed {seed}", report.checks.len());
    Ok(Output { json: report.to_json_lines(), text, ok: failed == 0 })
}
