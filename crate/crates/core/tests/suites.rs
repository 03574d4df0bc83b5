use mathieu_core::experiments::{run_suite, SuiteName, DEFAULT_SEED};
use mathieu_core::ScanConfig;

fn assert_passes(name: SuiteName) {
    let report = run_suite(name, DEFAULT_SEED, &ScanConfig::default()).unwrap();
    let failures: Vec<String> =
        report.failures().map(|c| format!("{}/{}: {:?}", c.check, c.instance, c.witness)).collect();
    assert!(failures.is_empty(), "{name}: {failures:#?}");
    assert!(!report.checks.is_empty());
}

#[test]
fn idempotent_criterion_suite_passes() {
    assert_passes(SuiteName::IdempotentCriterion);
}

#[test]
fn codim1_suite_passes() {
    assert_passes(SuiteName::Codim1);
}

#[test]
fn reports_are_deterministic() {
    let cfg = ScanConfig::default();
    let strip = |s: String| -> Vec<String> {
        s.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("millis");
                v.to_string()
            })
            .collect()
    };
    let a = run_suite(SuiteName::Lines, 5, &cfg).unwrap();
    let b = run_suite(SuiteName::Lines, 5, &ScanConfig::sequential()).unwrap();
    assert_eq!(strip(a.to_json_lines()), strip(b.to_json_lines()));
    assert!(a.checks.iter().all(|c| c.seed == 5));
}
