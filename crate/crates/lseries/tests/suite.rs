use lseries::check::passes;
use lseries::values::Cplx;
use lseries::{default_suite, parse_suite, run_check, run_suite, CheckSpec, Status, SuiteConfig};
use lseries_core::{Complex64, EvalConfig};
use proptest::prelude::*;
use std::path::Path;
use std::process::Command;

fn spec(json: &str) -> CheckSpec {
    let s: CheckSpec = serde_json::from_str(json).unwrap();
    s.validate().unwrap();
    s
}

fn suite(json: &str) -> SuiteConfig {
    parse_suite(json, Path::new("inline.json")).unwrap()
}

// a ray truncated at T = 20 misses a tail of about 2e-9, far above the
// quadrature error estimates
const SHORT_RAY: &str =
    r#"{"id": "short-ray", "theorem": "lemma_bend", "params": {"a": 0.5, "w": [0, 1], "t": 20}}"#;

#[test]
fn empty_suite_succeeds() {
    let r = run_suite(&suite(r#"{"checks": []}"#), None, 1e-6, &EvalConfig::default());
    assert!(r.checks.is_empty() && r.success());
    assert_eq!(r.to_json().replace(char::is_whitespace, ""), r#"{"summary":{"pass":0,"fail":0,"skipped":0},"checks":[]}"#);
}

#[test]
fn tolerance_gate() {
    let cfg = EvalConfig::default();
    let s = spec(SHORT_RAY);
    let ok = run_check(&s, 1e-6, &cfg);
    assert_eq!(ok.status, Status::Pass);
    let bad = run_check(&s, 1e-20, &cfg);
    assert_eq!(bad.status, Status::Fail);
    assert!(bad.abs_err.unwrap() > bad.lhs_err_est.unwrap() + bad.rhs_err_est.unwrap());
}

#[test]
fn precondition_violations_skip() {
    let cfg = EvalConfig::default();
    for json in [
        r#"{"id": "fe", "theorem": "prop_fe", "form": "J", "params": {"s": 0, "w": [1, 0]}}"#,
        r#"{"id": "hurw", "theorem": "cor_hurw", "form": "J", "params": {"s": 0.5}}"#,
        r#"{"id": "real-w", "theorem": "thm_main", "form": "J", "params": {"s": 1, "w": [1, 0]}}"#,
        r#"{"id": "bend", "theorem": "lemma_bend", "params": {"a": 0.5, "w": [1, 0]}}"#,
        r#"{"id": "zag", "theorem": "prop_zag", "form": "synth:{\"holo\": {\"1\": 1}, \"nonholo\": {\"-1\": 1}}"}"#,
    ] {
        let r = run_check(&spec(json), 1e-6, &cfg);
        assert_eq!(r.status, Status::Skipped, "{json}: {}", r.message);
        assert!(!r.message.is_empty());
    }
}

#[test]
fn evaluator_errors_fail_with_a_message() {
    // two coefficients of J cannot meet the tail tolerance at s = 0
    let r = run_check(
        &spec(r#"{"id": "short", "theorem": "prop_zag", "form": "J", "params": {"prec": 2}}"#),
        1e-6,
        &EvalConfig::default(),
    );
    assert_eq!(r.status, Status::Fail);
    assert!(r.message.contains("truncation"), "{}", r.message);
}

#[test]
fn report_fields_present_for_every_status() {
    let s = suite(&format!(
        r#"{{"checks": [{SHORT_RAY},
            {{"id": "skip", "theorem": "prop_fe", "form": "J", "params": {{"s": 0, "w": [1, 0]}}}},
            {{"id": "fail", "theorem": "lemma_bend", "params": {{"a": 0.5, "w": [0, 1], "t": 20}}, "tolerance": 1e-20}}]}}"#
    ));
    let r = run_suite(&s, None, 1e-6, &EvalConfig::default());
    assert_eq!((r.summary.pass, r.summary.skipped, r.summary.fail), (1, 1, 1));
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let fields = [
        "id", "theorem", "lhs", "rhs", "abs_err", "rel_err", "lhs_err_est", "rhs_err_est", "tolerance", "status",
        "runtime_ms", "message",
    ];
    for c in v["checks"].as_array().unwrap() {
        for f in fields {
            assert!(c.get(f).is_some(), "{f} missing in {c}");
        }
    }
    assert_eq!(v["checks"][1]["status"], "skipped");
}

#[test]
fn filter_and_order() {
    let s = default_suite();
    let pat = glob::Pattern::new("bend/a=0.5/*").unwrap();
    let r = run_suite(&s, Some(&pat), 1e-6, &EvalConfig::default());
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["bend/a=0.5/w=i", "bend/a=0.5/w=2i", "bend/a=0.5/w=1+i"]);
}

#[test]
fn parse_errors_carry_position() {
    let e = parse_suite("{\"checks\": [\n  {\"id\": 1}\n]}", Path::new("s.json")).unwrap_err().to_string();
    assert!(e.starts_with("s.json:2:"), "{e}");
    let dup = r#"{"checks": [{"id": "a", "theorem": "prop_zag", "form": "J"}, {"id": "a", "theorem": "prop_zag", "form": "J"}]}"#;
    assert!(parse_suite(dup, Path::new("d.json")).is_err());
}

#[test]
fn exit_status_and_tolerance_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("suite.json");
    std::fs::write(&path, format!(r#"{{"checks": [{SHORT_RAY}]}}"#)).unwrap();
    let run = |tol: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_lseries"));
        c.args(["verify", "--config", path.to_str().unwrap()]);
        c.env_remove(lseries::spec::TOLERANCE_ENV);
        if let Some(t) = tol {
            c.env(lseries::spec::TOLERANCE_ENV, t);
        }
        c.output().unwrap().status.code()
    };
    assert_eq!(run(None), Some(0));
    assert_eq!(run(Some("1e-20")), Some(1));
    assert_eq!(run(Some("not-a-number")), Some(0));
}

#[test]
fn report_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = Command::new(env!("CARGO_BIN_EXE_lseries"))
        .args(["verify", "--filter", "compact/*", "--report", report.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["summary"]["pass"], 4);
}

proptest! {
    #[test]
    fn pass_rule(abs in 0.0f64..1.0, tol in 1e-12f64..1.0, le in 0.0f64..1.0, re in 0.0f64..1.0) {
        prop_assert_eq!(passes(abs, tol, le, re), abs <= tol || abs <= le + re);
    }

    #[test]
    fn complex_wire_round_trip(re in -1e300f64..1e300, im in -1e300f64..1e300) {
        let z = Cplx(Complex64::new(re, im));
        let back: Cplx = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        prop_assert_eq!(back, z);
    }
}
