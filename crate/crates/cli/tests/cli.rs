use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mathieu-kit")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mathieu-kit-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn at(path: &Path) -> String {
    format!("@{}", path.display())
}

#[test]
fn trace_zero_hyperplane_is_mathieu() {
    let h = scratch("H.json", r#"{"basis": [[1, 0, 0, -1], [0, 1, 0, 0], [0, 0, 1, 0]]}"#);
    let out = kit(&["space", "check", "--algebra", "mat:2:3", "--basis", &at(&h), "--theta", "two_sided"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("true"));
}

#[test]
fn false_verdict_exits_one_with_witness() {
    let v = r#"[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]"#;
    let out = kit(&["space", "check", "--algebra", "mat:2:3", "--basis", v, "--theta", "left", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["is_mathieu"], false);
    assert!(doc["witness"]["e"].is_array());
    let oracle = kit(&["space", "check", "--algebra", "mat:2:3", "--basis", v, "--theta", "left", "--oracle"]);
    assert_eq!(oracle.status.code(), Some(1));
    assert!(stdout(&oracle).starts_with("false"));
}

#[test]
fn codim1_over_f2_has_no_mathieu_classes() {
    let out = kit(&["mat", "codim1", "--n", "2", "--q", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["total"], 15);
    for theta in ["left", "right", "pre_two_sided", "two_sided"] {
        assert_eq!(doc["per_theta"][theta], 0);
    }
    assert_eq!(doc["representatives"], serde_json::json!([]));
}

#[test]
fn codim1_over_f3_keeps_only_the_identity() {
    let out = kit(&["mat", "codim1", "--n", "2", "--q", "3", "--json"]);
    let doc = json(&out);
    assert_eq!(doc["per_theta"]["two_sided"], 1);
    assert_eq!(doc["representatives"], serde_json::json!([["1", "0", "0", "1"]]));
}

#[test]
fn p_of_e11_is_e11() {
    let e = scratch("e11.json", "[1, 0, 0, 0]");
    let out = kit(&["elem", "pofa", "--algebra", "mat:2:0", "--elem", &at(&e), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!(["1", "0", "0", "0"]));
}

#[test]
fn errors_exit_two() {
    // nilpotent elements have no p(a)
    let out = kit(&["elem", "pofa", "--algebra", "mat:2:0", "--elem", "0,1,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(kit(&["algebra", "info", "--algebra", "mat:2:4"]).status.code(), Some(2));
    assert_eq!(kit(&["suite", "run", "no_such_suite"]).status.code(), Some(2));
    assert_eq!(kit(&["space", "check", "--algebra", "mat:2:2"]).status.code(), Some(2));
    let capped = kit(&["--max-scan", "10", "alg", "quasi-stable", "--algebra", "mat:2:3"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn validated_document_round_trips() {
    for spec in ["mat:2:3", "polyq:2:1,1,1", "dsum:mat:1:3+polyq:3:0,0,1", "opp:mat:2:0"] {
        let first = kit(&["algebra", "validate", "--algebra", spec, "--json"]);
        assert_eq!(first.status.code(), Some(0), "{spec}");
        let doc = scratch("alg.json", &stdout(&first));
        let second = kit(&["algebra", "validate", "--algebra", &at(&doc), "--json"]);
        assert_eq!(stdout(&first), stdout(&second), "{spec}");
    }
}

#[test]
fn subspace_output_feeds_back_in() {
    let found = kit(&["alg", "find-ms", "--algebra", "mat:2:2", "--json"]);
    assert_eq!(found.status.code(), Some(0));
    let v = scratch("ms.json", &stdout(&found));
    for theta in ["left", "right", "pre_two_sided", "two_sided"] {
        let out = kit(&["space", "check", "--algebra", "mat:2:2", "--basis", &at(&v), "--theta", theta]);
        assert_eq!(out.status.code(), Some(0), "{theta}");
    }
}

#[test]
fn stability_verdicts() {
    assert_eq!(kit(&["alg", "quasi-stable", "--algebra", "polyq:2:1,1,1"]).status.code(), Some(0));
    assert_eq!(kit(&["alg", "quasi-stable", "--algebra", "mat:2:2"]).status.code(), Some(1));
    assert_eq!(kit(&["alg", "stable", "--algebra", "dsum:mat:1:2+mat:1:2"]).status.code(), Some(0));
    assert_eq!(kit(&["alg", "stable", "--algebra", "dsum:mat:1:3+mat:1:3"]).status.code(), Some(1));
}

#[test]
fn suite_output_is_reproducible() {
    let strip = |s: String| -> Vec<Value> {
        s.lines()
            .map(|l| {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("millis");
                v
            })
            .collect()
    };
    let a = kit(&["suite", "run", "lines", "--json"]);
    let b = kit(&["suite", "run", "lines", "--json", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    let (a, b) = (strip(stdout(&a)), strip(stdout(&b)));
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert!(a.iter().all(|l| l["seed"] == 20_240_601 && l["pass"] == true));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["alg", "lattice", "--algebra", "polyq:2:0,0,1", "--theta", "left", "--json"];
    assert_eq!(stdout(&kit(&args)), stdout(&kit(&args)));
    let args = ["space", "radical-enum", "--algebra", "mat:2:2", "--basis", "[[0,1,0,0]]"];
    assert_eq!(stdout(&kit(&args)), stdout(&kit(&args)));
}
