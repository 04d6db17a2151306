use std::process::{Command, Output};

fn lseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lseries")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn pair(o: &Output) -> (f64, f64) {
    let text = stdout(o);
    let v: Vec<f64> = text.split_whitespace().map(|t| t.parse().unwrap()).collect();
    assert_eq!(v.len(), 2, "{text}");
    (v[0], v[1])
}

#[test]
fn specfun_prints_re_im() {
    let o = lseries(&["specfun", "E", "1", "--", "-6.2831853"]);
    assert!(o.status.success());
    let (re, im) = pair(&o);
    // E_1(−x) = −Ei(x) − iπ; Ei(6.2831853) = 107.473240209243 (mpmath)
    assert!((re + 107.473240209243).abs() < 1e-9, "{re}");
    assert!((im + std::f64::consts::PI).abs() < 1e-12, "{im}");

    let (re, im) = pair(&lseries(&["specfun", "zetastar", "1", "0.5,0.5"]));
    assert!(re.is_finite() && im.is_finite());
}

#[test]
fn coeffs_csv_rows() {
    let o = lseries(&["coeffs", "J", "--prec", "5", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows, ["n,re,im", "-1,1,0", "0,0,0", "1,196884,0", "2,21493760,0", "3,864299970,0", "4,20245856256,0"]);
}

#[test]
fn coeffs_json_keeps_exact_integers() {
    let o = lseries(&["coeffs", "J", "--prec", "11", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let last = v["holo"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["n"], 10);
    // c(10) = 22567393309593600 exceeds 2^53; the text must carry every digit
    let text = stdout(&o);
    assert!(text.contains("\"re\": 22567393309593600,"), "{text}");
}

#[test]
fn lvalue_star_of_j_at_zero() {
    let (re, im) = pair(&lseries(&["lvalue", "J", "--s", "0", "--star"]));
    assert!((re + 50.354862165668).abs() < 1e-9, "{re}");
    assert!((im + std::f64::consts::PI).abs() < 1e-9, "{im}");
}

#[test]
fn verify_single_check() {
    let o = lseries(&["verify", "--filter", "prop_zag"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1, "{text}");
    assert!(text.starts_with("PASS prop_zag"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["specfun", "nosuch", "1"][..],
        &["specfun", "E", "1"],
        &["coeffs", "K"],
        &["lvalue", "J", "--s", "1"],
        &["verify", "--config", "/nonexistent/suite.json"],
        &["frobnicate"],
    ] {
        let o = lseries(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}
