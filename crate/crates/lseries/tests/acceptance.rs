//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 2 cannot be met as stated: on the real axis the ray integral
//! truncated at `T = 200` misses a tail of size about `e^{−1}/T²`, so it
//! stays red. The test asserts every other criterion.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use lseries::grid::specfun_grid;
use lseries::{default_suite, run_suite, Status, SuiteReport};
use lseries_core::contour::{
    bern_terms, bfi_series, compact_support_value, contour_limit_at_zero, r_remainder, ray_integral_bend,
    rhs_integer_value, rhs_main_theorem, RForm,
};
use lseries_core::cplx::{self, c};
use lseries_core::extrapolate::ExtrapolationConfig;
use lseries_core::ltest::{
    functional_equation_sides, l_star, l_value, l_value_by_vertical_integral, AnalyticSeed, TestFunction,
};
use lseries_core::modforms::{build_j, build_jsq, synth_harmonic, FourierExpansion};
use lseries_core::quad::QuadratureConfig;
use lseries_core::specfun::exp_int_e;
use lseries_core::{Complex64, EvalConfig};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

const UNATTAINABLE: &[u32] = &[2];

type Criterion = (u32, &'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

/// Tracks the worst deviation seen and any hard failure.
#[derive(Default)]
struct Worst {
    dev: f64,
    at: String,
    errors: Vec<String>,
}

impl Worst {
    fn see(&mut self, dev: f64, at: impl FnOnce() -> String) {
        if !(dev <= self.dev) {
            self.dev = dev;
            self.at = at();
        }
    }

    fn verdict(self, tol: f64, extra: &str) -> Verdict {
        let pass = self.errors.is_empty() && self.dev <= tol;
        let mut detail = format!("worst |Δ| = {:.2e} at {} (bound {tol:.0e}){extra}", self.dev, self.at);
        if !self.errors.is_empty() {
            detail += &format!("; errors: {}", self.errors.join("; "));
        }
        Verdict { pass, detail }
    }
}

fn synth(k: i32, holo: &[(i64, Complex64)], nonholo: &[(i64, Complex64)]) -> FourierExpansion {
    synth_harmonic(k, holo.iter().copied().collect(), nonholo.iter().copied().collect::<BTreeMap<_, _>>()).unwrap()
}

fn r(x: f64) -> Complex64 {
    cplx::re(x)
}

fn criterion_1() -> Verdict {
    let g = specfun_grid(1e-9);
    let pass = g.passed() && g.assertions >= 500 && g.elapsed < Duration::from_secs(5);
    let mut detail = format!("{} assertions, {} failed, {:.2?}", g.assertions, g.failures.len(), g.elapsed);
    if let Some(f) = g.failures.first() {
        detail += &format!("; first: {f}");
    }
    Verdict { pass, detail }
}

fn criterion_2() -> Verdict {
    let cfg = QuadratureConfig::default();
    let mut w = Worst::default();
    let mut cases: Vec<(f64, Complex64)> = Vec::new();
    for a in [-1.0, 0.5, 2.0] {
        for z in [c(0.0, 1.0), c(0.0, 2.0), c(1.0, 1.0)] {
            cases.push((a, z));
        }
    }
    cases.push((-1.0, r(1.0)));
    for (a, z) in cases {
        let want = cplx::i_pow(a) * exp_int_e(r(1.0 - a), z).unwrap();
        match ray_integral_bend(a, z, 200.0, &cfg) {
            Ok(v) => w.see((v.value - want).norm(), || format!("a = {a}, w = {z}")),
            Err(e) => w.errors.push(format!("a = {a}, w = {z}: {e}")),
        }
    }
    w.verdict(1e-6, "")
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let cfg = EvalConfig::default();
    let forms = [
        ("J", build_j(40).unwrap()),
        ("J²−c", build_jsq(40).unwrap()),
        ("synth", synth(0, &[(-1, r(1.0)), (1, r(2.0)), (3, r(-1.0))], &[])),
    ];
    let mut w = Worst::default();
    for (name, f) in &forms {
        for s in [-1.5, 0.0, 0.5, 2.0] {
            for z in [c(0.0, 1.0), c(0.3, 0.7)] {
                let lhs = l_value(f, &TestFunction::phi_sw(s, z));
                let rhs = rhs_main_theorem(f, s, z, &cfg);
                match (lhs, rhs) {
                    (Ok(l), Ok(rv)) => w.see((l.value - rv.value).norm(), || format!("{name}, s = {s}, w = {z}")),
                    (l, rv) => w.errors.push(format!("{name}, s = {s}, w = {z}: {:?} / {:?}", l.err(), rv.err())),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let mut v = w.verdict(1e-7, &format!(", 24 cases in {elapsed:.2?}"));
    v.pass &= elapsed < Duration::from_secs(30);
    v
}

fn criterion_4() -> Verdict {
    let cfg = EvalConfig::default();
    let z = c(0.5, 1.0);
    let mut w = Worst::default();
    let nonholos: [&[(i64, Complex64)]; 3] =
        [&[(-1, r(1.0))], &[(-2, c(0.5, 0.25))], &[(-1, c(2.0, -1.0)), (-2, r(0.3))]];
    for k in [0, -2] {
        for nh in nonholos {
            let f = synth(k, &[(1, r(1.0))], nh);
            for s in [0.5, 1.0, 2.0] {
                let at = || format!("k = {k}, nonholo {:?}, s = {s}", nh.iter().map(|p| p.0).collect::<Vec<_>>());
                match (l_value(&f, &TestFunction::phi_sw(s, z)), rhs_main_theorem(&f, s, z, &cfg)) {
                    (Ok(l), Ok(rv)) => w.see((l.value - rv.value).norm(), at),
                    (l, rv) => w.errors.push(format!("{}: {:?} / {:?}", at(), l.err(), rv.err())),
                }
                match (
                    r_remainder(&f, s, z, RForm::OneDim, &cfg),
                    r_remainder(&f, s, z, RForm::DoubleIntegral, &cfg),
                ) {
                    (Ok(a), Ok(b)) => w.see((a.value - b.value).norm(), || format!("R forms, {}", at())),
                    (a, b) => w.errors.push(format!("R forms, {}: {:?} / {:?}", at(), a.err(), b.err())),
                }
            }
        }
    }
    w.verdict(1e-6, "")
}

fn criterion_5() -> Verdict {
    let cfg = EvalConfig::default();
    let j = build_j(40).unwrap();
    let mut w = Worst::default();
    for m in -3..=3i64 {
        match (l_star(&j, m as f64), rhs_integer_value(&j, m, &cfg)) {
            (Ok(l), Ok(rv)) => w.see((l.value - rv.value).norm(), || format!("m = {m}")),
            (l, rv) => w.errors.push(format!("m = {m}: {:?} / {:?}", l.err(), rv.err())),
        }
    }
    let bfi = bfi_series(&j, &cfg).unwrap().value.re;
    let star = 2.0 * l_star(&j, 0.0).unwrap().value.re;
    let zag = 2.0 * rhs_integer_value(&j, 0, &cfg).unwrap().value.re;
    w.see((bfi - star).abs(), || "Re 2ΣaEI vs 2 Re L*(J, 0)".into());
    w.see((star - zag).abs(), || "2 Re L*(J, 0) vs −2 Re ∫Jψ".into());
    w.verdict(1e-7, "")
}

fn criterion_6() -> Verdict {
    let cfg = EvalConfig::default();
    let ext = ExtrapolationConfig::default();
    let mut w = Worst::default();
    let mut printed = 0.0f64;
    for (k, b) in [(0, r(1.0)), (-2, c(2.0, -1.0))] {
        let f = synth(k, &[(1, r(1.0)), (-1, r(0.5))], &[(-1, b), (-2, r(0.3))]);
        for m in [1u32, 2] {
            let s = 1.0 + m as f64;
            let lhs = l_star(&f, s).unwrap().value;
            match contour_limit_at_zero(&f, s, &cfg, &ext) {
                Ok(o) => w.see((o.value - lhs).norm(), || format!("k = {k}, m = {m}")),
                Err(e) => w.errors.push(format!("k = {k}, m = {m}: {e}")),
            }
            if let Ok(t) = bern_terms(&f, m, &cfg) {
                printed = printed.max((t.printed() - lhs).norm());
            }
        }
    }
    w.verdict(1e-5, &format!("; printed closed form off by up to {printed:.2e} (documented discrepancy)"))
}

fn criterion_7() -> Verdict {
    let cfg = EvalConfig::default();
    let j = build_j(40).unwrap();
    let mut w = Worst::default();
    let mut rel = 0.0f64;
    for s in [0.0, 1.0, -0.5] {
        match functional_equation_sides(&j, &j, r(s), c(30.0, 5.0), &cfg) {
            Ok(fe) => {
                let d = (fe.lhs.value - fe.rhs_value()).norm();
                rel = rel.max(d / fe.lhs.value.norm());
                w.see(d, || format!("s = {s}"));
            }
            Err(e) => w.errors.push(format!("s = {s}: {e}")),
        }
    }
    w.verdict(1e-6, &format!(", worst relative {rel:.2e}"))
}

fn criterion_8() -> Verdict {
    let cfg = EvalConfig::default();
    let j = build_j(40).unwrap();
    let mut w = Worst::default();
    for p in [2u32, 3] {
        for (a, b) in [(1.0, 2.0), (1.0, 1.5)] {
            let seed = AnalyticSeed::InversePower { power: p, shift: 0.0 };
            let direct = l_value_by_vertical_integral(&j, &TestFunction::compact(a, b, seed).unwrap());
            match (compact_support_value(&j, &seed, a, b, &cfg), direct) {
                (Ok(t), Ok(d)) => w.see((t.value - d.value).norm(), || format!("z^-{p} on [{a}, {b}]")),
                (t, d) => w.errors.push(format!("z^-{p} on [{a}, {b}]: {:?} / {:?}", t.err(), d.err())),
            }
        }
    }
    w.verdict(1e-8, "")
}

fn criterion_9() -> Verdict {
    let forms = [
        ("J", build_j(40).unwrap(), 2.0 * std::f64::consts::PI),
        ("J²−c", build_jsq(40).unwrap(), 4.0 * std::f64::consts::PI),
        ("synth", synth(0, &[(-1, r(1.0)), (1, r(2.0)), (3, r(-1.0))], &[]), 2.0 * std::f64::consts::PI),
        ("harmonic k=0", synth(0, &[(1, r(1.0))], &[(-1, r(1.0))]), 0.0),
        ("harmonic k=-2", synth(-2, &[(2, r(0.5))], &[(-1, c(2.0, -1.0)), (-2, r(0.3))]), 0.0),
    ];
    let mut phis = Vec::new();
    for (p, a, b) in [(2u32, 1.0, 2.0), (3, 1.0, 1.5), (2, 0.75, 3.0)] {
        phis.push((0.0, TestFunction::compact(a, b, AnalyticSeed::InversePower { power: p, shift: 0.0 }).unwrap()));
    }
    for s in [-1.5, 0.5, 2.0] {
        for z in [c(0.5, 1.0), c(15.0, 2.0), c(30.0, 5.0)] {
            phis.push((z.re, TestFunction::phi_sw(s, z)));
        }
    }
    let mut cases = 0;
    let mut worst_ratio = 0.0f64;
    let mut at = String::new();
    let mut errors = Vec::new();
    for (name, f, need) in &forms {
        for (re_w, phi) in &phis {
            if matches!(phi, TestFunction::PhiSw { .. }) && !(*re_w > *need) {
                continue;
            }
            cases += 1;
            match (l_value(f, phi), l_value_by_vertical_integral(f, phi)) {
                (Ok(l), Ok(d)) => {
                    let dev = (l.value - d.value).norm();
                    let budget = l.error_estimate + d.err;
                    let ratio = if dev == 0.0 { 0.0 } else { dev / budget };
                    if !(ratio <= worst_ratio) {
                        worst_ratio = ratio;
                        at = format!("{name}, {phi:?}: |Δ| = {dev:.2e}, estimates {budget:.2e}");
                    }
                }
                (l, d) => errors.push(format!("{name}, {phi:?}: {:?} / {:?}", l.err(), d.err())),
            }
        }
    }
    let pass = errors.is_empty() && worst_ratio <= 1.0;
    let mut detail = format!("{cases} cases, worst |Δ|/estimate = {worst_ratio:.2e} ({at})");
    if !errors.is_empty() {
        detail += &format!("; errors: {}", errors.join("; "));
    }
    Verdict { pass, detail }
}

fn strip_runtime(r: &SuiteReport) -> String {
    let mut v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for c in v["checks"].as_array_mut().unwrap() {
        c["runtime_ms"] = 0.into();
    }
    v.to_string()
}

fn criterion_10() -> Verdict {
    let suite = default_suite();
    let cfg = EvalConfig::default();
    let start = Instant::now();
    let first = run_suite(&suite, None, 1e-6, &cfg);
    let elapsed = start.elapsed();
    let second = run_suite(&suite, None, 1e-6, &cfg);
    let deterministic = strip_runtime(&first) == strip_runtime(&second);
    let failed: Vec<&str> =
        first.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    let s = first.summary;
    let n = first.checks.len();
    let pass = first.success() && deterministic && elapsed < Duration::from_secs(120) && (30..=60).contains(&n);
    Verdict {
        pass,
        detail: format!(
            "{n} checks: {} pass, {} fail, {} skipped in {elapsed:.2?}; deterministic: {deterministic}{}",
            s.pass,
            s.fail,
            s.skipped,
            if failed.is_empty() { String::new() } else { format!("; failed: {}", failed.join(", ")) }
        ),
    }
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "special-function invariant grid", criterion_1),
        (2, "ray integral converges to i^a E_{1-a}(w) at T = 200", criterion_2),
        (3, "contour side equals series side, weakly holomorphic", criterion_3),
        (4, "contour side equals series side, harmonic; remainder forms agree", criterion_4),
        (5, "integer values of L*(J, m) and the EI series", criterion_5),
        (6, "Bernoulli closed form adjudicated by the x -> 0 oracle", criterion_6),
        (7, "functional equation for J", criterion_7),
        (8, "compact-support telescoping", criterion_8),
        (9, "series side equals vertical integral", criterion_9),
        (10, "default verify suite", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let v = run();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        let note = if !v.pass && UNATTAINABLE.contains(&n) { " [documented as unattainable]" } else { "" };
        println!("criterion {n:>2}: {tag} {name}: {}{note}", v.detail);
        if !v.pass && !UNATTAINABLE.contains(&n) {
            unexpected.push(n);
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
