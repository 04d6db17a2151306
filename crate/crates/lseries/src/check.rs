//! Running a single check: both sides, the comparison and the report.

use crate::forms::FormDescriptor;
use crate::spec::{BernRhs, CheckSpec, Theorem};
use crate::values::Cplx;
use lseries_core::contour::{
    bern_terms, bfi_series, compact_support_value, contour_limit_at_zero, r_remainder, ray_integral_bend,
    ray_integral_bend_tail_corrected, rhs_integer_value, rhs_main_theorem, rhs_negative_s, rhs_negative_s_polygamma,
    RForm,
};
use lseries_core::cplx;
use lseries_core::extrapolate::ExtrapolationConfig;
use lseries_core::ltest::{
    functional_equation_sides, l_star_with, l_value_by_vertical_integral_with, l_value_with, AnalyticSeed, LValue,
    TestFunction,
};
use lseries_core::modforms::FourierExpansion;
use lseries_core::specfun::{exp_int_e_with, Estimate};
use lseries_core::{Complex64, EvalConfig};
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub theorem: &'static str,
    pub lhs: Option<Cplx>,
    pub rhs: Option<Cplx>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub lhs_err_est: Option<f64>,
    pub rhs_err_est: Option<f64>,
    pub tolerance: f64,
    pub status: Status,
    pub runtime_ms: u64,
    pub message: String,
}

/// Both sides of an identity with their error estimates.
#[derive(Debug, Clone)]
pub struct Sides {
    pub lhs: Estimate,
    pub rhs: Estimate,
    pub message: String,
}

impl Sides {
    fn new(lhs: Estimate, rhs: Estimate) -> Self {
        Self { lhs, rhs, message: String::new() }
    }

    fn with_message(mut self, message: String) -> Self {
        self.message = message;
        self
    }
}

enum Outcome {
    Skipped(String),
    Failed(String),
}

fn skip<T>(reason: impl Into<String>) -> Result<T, Outcome> {
    Err(Outcome::Skipped(reason.into()))
}

/// Precondition errors of the evaluators become skips; anything else fails.
fn classify(e: lseries_core::Error) -> Outcome {
    use lseries_core::Error as E;
    match e {
        E::Regime(_) | E::Admissibility(_) | E::Unsupported(_) => Outcome::Skipped(e.to_string()),
        _ => Outcome::Failed(e.to_string()),
    }
}

fn lv(v: LValue) -> Estimate {
    Estimate::new(v.value, v.error_estimate)
}

fn combine(a: Estimate, b: Estimate) -> Estimate {
    Estimate::new(a.value + b.value, a.err + b.err)
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, Outcome> {
    v.ok_or_else(|| Outcome::Failed(format!("missing parameter `{name}`")))
}

fn build_form(spec: &CheckSpec) -> Result<FourierExpansion, Outcome> {
    let text = spec.form.as_deref().ok_or_else(|| Outcome::Failed("missing form".into()))?;
    FormDescriptor::parse(text)
        .and_then(|d| d.build(spec.params.prec))
        .map_err(|e| Outcome::Failed(e.to_string()))
}

fn weakly_holomorphic(f: &FourierExpansion, what: &str) -> Result<(), Outcome> {
    if f.is_weakly_holomorphic() {
        Ok(())
    } else {
        skip(format!("{what} applies to weakly holomorphic forms only"))
    }
}

fn evaluate(spec: &CheckSpec, cfg: &EvalConfig) -> Result<Sides, Outcome> {
    let p = &spec.params;
    if spec.theorem == Theorem::Bend {
        return bend(spec);
    }
    let f = build_form(spec)?;
    let sides = match spec.theorem {
        Theorem::MainCor | Theorem::Main => {
            if spec.theorem == Theorem::MainCor {
                weakly_holomorphic(&f, "thm_maincor")?;
            }
            let (s, w) = (need(p.s, "s")?, need(p.w, "w")?.0);
            if !(w.im > 0.0) || w.re < 0.0 {
                return skip(format!("contour side needs Im w > 0 and Re w ≥ 0, got {w}"));
            }
            let lhs = l_value_with(&f, &TestFunction::phi_sw(s, w), cfg).map_err(classify)?;
            let rhs = rhs_main_theorem(&f, s, w, cfg).map_err(classify)?;
            Sides::new(lv(lhs), rhs)
        }
        Theorem::Zagier => {
            weakly_holomorphic(&f, "prop_zag")?;
            let lhs = l_star_with(&f, 0.0, cfg).map_err(classify)?;
            let rhs = rhs_integer_value(&f, 0, cfg).map_err(classify)?;
            Sides::new(lv(lhs), rhs)
        }
        Theorem::BernWeaklyHolomorphic => {
            weakly_holomorphic(&f, "cor_bernWHF")?;
            let m = need(p.m, "m")?;
            if m < 0 {
                return skip(format!("cor_bernWHF needs m ≥ 0, got {m}"));
            }
            let lhs = l_star_with(&f, 1.0 + m as f64, cfg).map_err(classify)?;
            let t = bern_terms(&f, m as u32, cfg).map_err(classify)?;
            Sides::new(lv(lhs), t.holo)
        }
        Theorem::Bern | Theorem::Polylog => {
            let m = if spec.theorem == Theorem::Polylog { 0 } else { need(p.m, "m")? };
            if spec.theorem == Theorem::Bern && m < 1 {
                return skip(format!("thm_bern needs m ≥ 1, got {m}"));
            }
            bern_sides(&f, m as u32, p.rhs.unwrap_or_default(), cfg)?
        }
        Theorem::Hurwitz => {
            weakly_holomorphic(&f, "cor_hurw")?;
            let s = need(p.s, "s")?;
            if !(s < 0.0) {
                return skip(format!("cor_hurw needs s < 0, got {s}"));
            }
            let lhs = l_star_with(&f, s, cfg).map_err(classify)?;
            let rhs = rhs_negative_s(&f, s, cfg).map_err(classify)?;
            let mut sides = Sides::new(lv(lhs), rhs);
            if s == s.round() {
                let pg = rhs_negative_s_polygamma(&f, s as i64, cfg).map_err(classify)?;
                sides = sides.with_message(format!(
                    "polygamma form: printed prefactor deviates by {:.3e}, corrected by {:.3e}",
                    (pg.printed - lhs.value).norm(),
                    (pg.corrected - lhs.value).norm()
                ));
            }
            sides
        }
        Theorem::FunctionalEquation => {
            let (s, w) = (need(p.s, "s")?, need(p.w, "w")?.0);
            if f.level != 1 {
                return skip("prop_fe is wired for level 1, where the Fricke image of f is f");
            }
            let fe = functional_equation_sides(&f, &f, cplx::re(s), w, cfg).map_err(classify)?;
            let rhs = Estimate::new(fe.rhs_value(), fe.factor.norm() * fe.rhs.error_estimate);
            Sides::new(lv(fe.lhs), rhs)
        }
        Theorem::IntegralForm => {
            let phi = match &p.phi {
                Some(name) => compact_testfn(name, need(p.a, "a")?, need(p.b, "b")?)?,
                None => TestFunction::phi_sw(need(p.s, "s")?, need(p.w, "w")?.0),
            };
            let lhs = l_value_with(&f, &phi, cfg).map_err(classify)?;
            let rhs = l_value_by_vertical_integral_with(&f, &phi, cfg).map_err(classify)?;
            Sides::new(lv(lhs), rhs)
        }
        Theorem::CompactSupport => {
            let name = p.phi.as_deref().ok_or_else(|| Outcome::Failed("missing parameter `phi`".into()))?;
            let (a, b) = (need(p.a, "a")?, need(p.b, "b")?);
            let phi = compact_testfn(name, a, b)?;
            let seed = AnalyticSeed::from_name(name).map_err(classify)?;
            let lhs = l_value_by_vertical_integral_with(&f, &phi, cfg).map_err(classify)?;
            let rhs = compact_support_value(&f, &seed, a, b, cfg).map_err(classify)?;
            Sides::new(lhs, rhs)
        }
        Theorem::RFormEquality => {
            let (s, w) = (need(p.s, "s")?, need(p.w, "w")?.0);
            let lhs = r_remainder(&f, s, w, RForm::OneDim, cfg).map_err(classify)?;
            let rhs = r_remainder(&f, s, w, RForm::DoubleIntegral, cfg).map_err(classify)?;
            Sides::new(lhs, rhs)
        }
        Theorem::BfiConsistency => {
            weakly_holomorphic(&f, "bfi_consistency")?;
            let series = bfi_series(&f, cfg).map_err(classify)?;
            let star = l_star_with(&f, 0.0, cfg).map_err(classify)?;
            let zag = rhs_integer_value(&f, 0, cfg).map_err(classify)?;
            let re = |e: Estimate, scale: f64| Estimate::new(cplx::re(scale * e.value.re), scale * e.err);
            Sides::new(re(series, 1.0), re(lv(star), 2.0)).with_message(format!(
                "2·Re of the contour value deviates by {:.3e}",
                (2.0 * zag.value.re - series.value.re).abs()
            ))
        }
        Theorem::Bend => unreachable!("handled above"),
    };
    Ok(sides)
}

fn compact_testfn(name: &str, a: f64, b: f64) -> Result<TestFunction, Outcome> {
    let seed = AnalyticSeed::from_name(name).map_err(classify)?;
    TestFunction::compact(a, b, seed).map_err(classify)
}

fn bend(spec: &CheckSpec) -> Result<Sides, Outcome> {
    let p = &spec.params;
    let (a, w) = (need(p.a, "a")?, need(p.w, "w")?.0);
    let t = p.t.unwrap_or(200.0);
    let quad = EvalConfig::default().quad;
    let lhs = if p.tail_corrected.unwrap_or(false) {
        ray_integral_bend_tail_corrected(a, w, t, &quad).map_err(classify)?
    } else {
        let r = ray_integral_bend(a, w, t, &quad).map_err(classify)?;
        Estimate::new(r.value, r.est_error)
    };
    let e = exp_int_e_with(cplx::re(1.0 - a), w, &EvalConfig::default().specfun).map_err(classify)?;
    let ia = cplx::i_pow(a);
    Ok(Sides::new(lhs, Estimate::new(ia * e.value, e.err)))
}

fn bern_sides(f: &FourierExpansion, m: u32, which: BernRhs, cfg: &EvalConfig) -> Result<Sides, Outcome> {
    let s = 1.0 + m as f64;
    let lhs = lv(l_star_with(f, s, cfg).map_err(classify)?);
    let t = bern_terms(f, m, cfg).map_err(classify)?;
    let printed = combine(t.holo, t.printed_remainder);
    let corrected = combine(t.holo, t.corrected_remainder);
    let note = format!(
        "printed closed form deviates by {:.3e}; corrected closed form by {:.3e}",
        (printed.value - lhs.value).norm(),
        (corrected.value - lhs.value).norm()
    );
    let rhs = match which {
        BernRhs::Oracle => {
            contour_limit_at_zero(f, s, cfg, &ExtrapolationConfig::default()).map_err(classify)?
        }
        BernRhs::Printed => printed,
        BernRhs::Corrected => corrected,
    };
    Ok(Sides::new(lhs, rhs).with_message(note))
}

/// Pass iff `|lhs − rhs| ≤ max(tolerance, lhs_err + rhs_err)`.
pub fn passes(abs_err: f64, tolerance: f64, lhs_err: f64, rhs_err: f64) -> bool {
    abs_err <= tolerance.max(lhs_err + rhs_err)
}

pub fn run_check(spec: &CheckSpec, default_tolerance: f64, cfg: &EvalConfig) -> CheckReport {
    let start = Instant::now();
    let tolerance = spec.tolerance_or(default_tolerance);
    let outcome = evaluate(spec, cfg);
    let runtime_ms = start.elapsed().as_millis() as u64;
    let mut report = CheckReport {
        id: spec.id.clone(),
        theorem: spec.theorem.id(),
        lhs: None,
        rhs: None,
        abs_err: None,
        rel_err: None,
        lhs_err_est: None,
        rhs_err_est: None,
        tolerance,
        status: Status::Fail,
        runtime_ms,
        message: String::new(),
    };
    match outcome {
        Ok(sides) => {
            let abs_err = (sides.lhs.value - sides.rhs.value).norm();
            let scale = sides.rhs.value.norm();
            report.lhs = Some(sides.lhs.value.into());
            report.rhs = Some(sides.rhs.value.into());
            report.abs_err = Some(abs_err);
            report.rel_err = Some(if scale > 0.0 { abs_err / scale } else { abs_err });
            report.lhs_err_est = Some(sides.lhs.err);
            report.rhs_err_est = Some(sides.rhs.err);
            report.status = if finite(sides.lhs.value) && finite(sides.rhs.value)
                && passes(abs_err, tolerance, sides.lhs.err, sides.rhs.err)
            {
                Status::Pass
            } else {
                Status::Fail
            };
            report.message = sides.message;
        }
        Err(Outcome::Skipped(reason)) => {
            report.status = Status::Skipped;
            report.message = reason;
        }
        Err(Outcome::Failed(reason)) => report.message = reason,
    }
    report
}

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
