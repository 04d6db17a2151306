use super::testfn::{fricke_transform_testfn, TestFunction};
use crate::config::EvalConfig;
use crate::cplx::{self, ZERO};
use crate::error::{Error, Result};
use crate::modforms::{eval_expansion_with, FourierExpansion};
use crate::quad::Quadrature;
use crate::specfun::{exp_int_e_with, inc_gamma_upper_with, Estimate};
use alloc::format;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// `L_f(φ)` split into the contributions of the holomorphic and
/// non-holomorphic parts of `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LValue {
    pub value: Complex64,
    pub holo_part: Complex64,
    pub nonholo_part: Complex64,
    pub error_estimate: f64,
}

impl LValue {
    fn new(holo: Estimate, nonholo: Estimate) -> Self {
        Self {
            value: holo.value + nonholo.value,
            holo_part: holo.value,
            nonholo_part: nonholo.value,
            error_estimate: holo.err + nonholo.err,
        }
    }
}

/// Upper bound for `|(ℒφ)(u)|` with `u = 2πn`, `n` beyond the stored range.
fn laplace_majorant(phi: &TestFunction, u: f64, cfg: &EvalConfig) -> Result<f64> {
    match *phi {
        TestFunction::PhiSw { s, w } => {
            // |E_p(z)| ≤ E_{Re p}(Re z) for Re z > 0
            let x = u + w.re;
            if !(x > 0.0) {
                return Ok(f64::INFINITY);
            }
            Ok(
                exp_int_e_with(cplx::re(1.0 - s.re), cplx::re(x), &cfg.specfun)?
                    .value
                    .re,
            )
        }
        TestFunction::FrickePhiSw { s, w, a, m } => {
            // Re w·t/2 + u/(Mt) ≥ 2√(u Re w/(2M))
            let x = w.re;
            if !(x > 0.0) {
                return Ok(f64::INFINITY);
            }
            let sigma = s.re + a as f64 - 3.0;
            let mf = m as f64;
            let tail = exp_int_e_with(cplx::re(-sigma), cplx::re(0.5 * x), &cfg.specfun)?
                .value
                .re;
            Ok((-2.0 * (u * x / (2.0 * mf)).sqrt()).exp() * tail / mf)
        }
        TestFunction::CompactAnalytic { lo, hi, seed } => {
            let sup = [lo, 0.5 * (lo + hi), hi]
                .iter()
                .map(|&y| seed.eval(cplx::c(0.0, y)).norm())
                .fold(0.0, f64::max);
            // the inverse-power seeds are monotone on the imaginary axis
            Ok(sup * (hi - lo) * (-u * lo).exp())
        }
    }
}

/// Bound on `Σ_{n>N} |a(n)| |(ℒφ)(2πn)|` from the coefficient bound.
fn holo_tail(f: &FourierExpansion, phi: &TestFunction, cfg: &EvalConfig) -> Result<f64> {
    if f.finite_support || f.bound_const == 0.0 {
        return Ok(0.0);
    }
    let mut total = 0.0;
    let start = f.max_index() + 1;
    for n in start..start + 100_000 {
        let nf = n as f64;
        let t = f.bound_const
            * (f.growth_const * nf.sqrt()).exp()
            * laplace_majorant(phi, 2.0 * PI * nf, cfg)?;
        if !t.is_finite() {
            return Err(Error::Admissibility(format!(
                "coefficient majorant diverges at n = {n} for {phi:?}"
            )));
        }
        total += t;
        if t <= 1e-20 * total || t < 1e-300 {
            return Ok(total);
        }
    }
    Err(Error::Admissibility(format!(
        "coefficient majorant does not converge for {phi:?}"
    )))
}

fn holo_part(
    f: &FourierExpansion,
    phi: &TestFunction,
    quad: &Quadrature,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    let mut acc = ZERO;
    let mut err = 0.0;
    let mut abs_sum = 0.0;
    for (&n, &a) in &f.holo {
        if n == 0 || a == ZERO {
            continue;
        }
        let l = phi.laplace(2.0 * PI * n as f64, quad, &cfg.specfun)?;
        let t = a * l.value;
        acc += t;
        abs_sum += t.norm();
        err += a.norm() * l.err;
    }
    let tail = holo_tail(f, phi, cfg)?;
    if tail > cfg.tail_tol * (1.0 + acc.norm()) {
        return Err(Error::InsufficientPrecision {
            bound: tail,
            tol: cfg.tail_tol,
        });
    }
    Ok(Estimate::new(
        acc,
        err + tail + 8.0 * f64::EPSILON * abs_sum,
    ))
}

/// `Σ_{n<0} b(n) ∫_0^∞ Γ(1−k, −4πny) e^{−2πny} φ(y) dy`.
fn nonholo_part(
    f: &FourierExpansion,
    phi: &TestFunction,
    quad: &Quadrature,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    if f.nonholo.is_empty() {
        return Ok(Estimate::exact(ZERO));
    }
    if let TestFunction::PhiSw { w, .. } = *phi {
        if w.re <= 0.0 && f.weight > 0 {
            return Err(Error::Admissibility(format!(
                "w = {w} needs k ≤ 0 for the non-holomorphic part"
            )));
        }
    }
    let order = cplx::re(1.0 - f.weight as f64);
    let (lo, hi) = phi.support();
    let mut acc = ZERO;
    let mut err = 0.0;
    for (&n, &b) in &f.nonholo {
        if b == ZERO {
            continue;
        }
        let m = n.unsigned_abs() as f64;
        let integrand = |y: f64| -> Result<Complex64> {
            let x = 4.0 * PI * m * y;
            if x > 1400.0 || !(y > 0.0) {
                return Ok(ZERO);
            }
            let g = inc_gamma_upper_with(order, cplx::re(x), &cfg.specfun)?.value;
            Ok(g * (2.0 * PI * m * y).exp() * phi.eval(y))
        };
        let r = if hi.is_finite() {
            quad.integrate(integrand, lo, hi)?
        } else {
            quad.integrate_to_infinity(integrand, lo)?
        };
        acc += b * r.value;
        err += b.norm() * r.est_error;
    }
    Ok(Estimate::new(acc, err))
}

/// `L_f(φ)`: the coefficient series against `ℒφ` plus the non-holomorphic
/// integrals.
pub fn l_value(f: &FourierExpansion, phi: &TestFunction) -> Result<LValue> {
    l_value_with(f, phi, &EvalConfig::default())
}

pub fn l_value_with(f: &FourierExpansion, phi: &TestFunction, cfg: &EvalConfig) -> Result<LValue> {
    cfg.validate()?;
    if let TestFunction::CompactAnalytic { lo, hi, seed } = *phi {
        seed.check_decay(lo, hi)?;
    }
    let quad = Quadrature::new(cfg.quad)?;
    let holo = holo_part(f, phi, &quad, cfg)?;
    let nonholo = nonholo_part(f, phi, &quad, cfg)?;
    Ok(LValue::new(holo, nonholo))
}

/// `∫_0^∞ f(iy) φ(y) dy` by quadrature over the support of `φ`.
pub fn l_value_by_vertical_integral(f: &FourierExpansion, phi: &TestFunction) -> Result<Estimate> {
    l_value_by_vertical_integral_with(f, phi, &EvalConfig::default())
}

pub fn l_value_by_vertical_integral_with(
    f: &FourierExpansion,
    phi: &TestFunction,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    let quad = Quadrature::new(cfg.quad)?;
    let mut trunc = 0.0f64;
    let mut integrand = |y: f64| -> Result<Complex64> {
        let p = phi.eval(y);
        if p == ZERO {
            return Ok(ZERO);
        }
        let v = eval_expansion_with(f, cplx::c(0.0, y), cfg.tail_tol)?;
        trunc = trunc.max(v.truncation_error * p.norm());
        Ok(v.value * p)
    };
    let r = match *phi {
        TestFunction::PhiSw { w, .. } => {
            let need = 2.0 * PI * f.n0 as f64;
            if !(w.re > need) {
                return Err(Error::Admissibility(format!(
                    "vertical integral of f(iy)φ(y) over [1, ∞) needs Re w > 2πn0 = {need}, got {w}"
                )));
            }
            quad.integrate_to_infinity(&mut integrand, 1.0)?
        }
        TestFunction::CompactAnalytic { lo, hi, seed } => {
            seed.check_decay(lo, hi)?;
            quad.integrate(&mut integrand, lo, hi)?
        }
        TestFunction::FrickePhiSw { .. } => {
            return Err(Error::Unsupported(
                "vertical integral for Fricke transforms: f(iy) is not summable as y → 0".into(),
            ))
        }
    };
    let (lo, hi) = phi.support();
    let len = if hi.is_finite() { hi - lo } else { 1.0 };
    Ok(Estimate::new(r.value, r.est_error + trunc * len))
}

/// `L*(f, s) = L_f(φ_s^0)`, evaluated directly at `w = 0`.
pub fn l_star(f: &FourierExpansion, s: f64) -> Result<LValue> {
    l_star_with(f, s, &EvalConfig::default())
}

pub fn l_star_with(f: &FourierExpansion, s: f64, cfg: &EvalConfig) -> Result<LValue> {
    l_value_with(f, &TestFunction::phi_sw(s, ZERO), cfg)
}

/// `L̃_f(s) = L*(f, s) + i^k L*(f, k − s)`.
pub fn l_tilde(f: &FourierExpansion, s: f64) -> Result<Estimate> {
    l_tilde_with(f, s, &EvalConfig::default())
}

pub fn l_tilde_with(f: &FourierExpansion, s: f64, cfg: &EvalConfig) -> Result<Estimate> {
    if !f.is_weakly_holomorphic() {
        return Err(Error::Unsupported(format!(
            "L̃ needs a weakly holomorphic expansion; {} has a non-holomorphic part",
            f.name
        )));
    }
    let k = f.weight as f64;
    let a = l_star_with(f, s, cfg)?;
    let b = l_star_with(f, k - s, cfg)?;
    Ok(Estimate::new(
        a.value + cplx::i_pow(k) * b.value,
        a.error_estimate + b.error_estimate,
    ))
}

/// Both sides of `L_f(φ_s^w) = i^k N^{1−k/2} L_g(φ_s^w |_{2−k} W_N)` with
/// `g = f|_k W_N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalEquationSides {
    pub lhs: LValue,
    pub rhs: LValue,
    pub factor: Complex64,
}

impl FunctionalEquationSides {
    pub fn rhs_value(&self) -> Complex64 {
        self.factor * self.rhs.value
    }
}

pub fn functional_equation_sides(
    f: &FourierExpansion,
    g: &FourierExpansion,
    s: Complex64,
    w: Complex64,
    cfg: &EvalConfig,
) -> Result<FunctionalEquationSides> {
    if !f.modular || !g.modular {
        return Err(Error::Unsupported(format!(
            "functional equation needs modular forms; {} or {} is flagged non-modular",
            f.name, g.name
        )));
    }
    if f.weight != g.weight || f.level != g.level {
        return Err(Error::InvalidExpansion(
            "f and its Fricke image must share weight and level".into(),
        ));
    }
    let n = f.level;
    let k = f.weight;
    let threshold =
        (2.0 * PI * f.n0 as f64).max(n as f64 * g.growth_const * g.growth_const / (2.0 * PI));
    if !(w.re > threshold) {
        return Err(Error::Admissibility(format!(
            "Re w = {} must exceed {threshold}",
            w.re
        )));
    }
    let phi = TestFunction::PhiSw { s, w };
    let lhs = l_value_with(f, &phi, cfg)?;
    let rhs = l_value_with(g, &fricke_transform_testfn(&phi, 2 - k, n)?, cfg)?;
    let factor = cplx::i_pow(k as f64) * (n as f64).powf(1.0 - 0.5 * k as f64);
    Ok(FunctionalEquationSides { lhs, rhs, factor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::{c, ONE};
    use crate::ltest::AnalyticSeed;
    use crate::modforms::{build_j, synth_harmonic};
    use alloc::collections::BTreeMap;

    fn single(k: i32, holo: &[(i64, f64)], nonholo: &[(i64, f64)]) -> FourierExpansion {
        let h: BTreeMap<_, _> = holo.iter().map(|&(n, a)| (n, cplx::re(a))).collect();
        let b: BTreeMap<_, _> = nonholo.iter().map(|&(n, a)| (n, cplx::re(a))).collect();
        synth_harmonic(k, h, b).unwrap()
    }

    #[test]
    fn single_term_examples() {
        let want = (-2.0 * PI).exp() / (2.0 * PI);
        let f = single(0, &[(1, 1.0)], &[]);
        let v = l_value(&f, &TestFunction::phi_sw(1.0, ZERO)).unwrap();
        assert!((v.value.re - want).abs() < 1e-15);
        let g = single(0, &[], &[(-1, 1.0)]);
        let v = l_value(&g, &TestFunction::phi_sw(1.0, ZERO)).unwrap();
        assert!((v.nonholo_part.re - want).abs() < 1e-14, "{v:?}");
        assert_eq!(v.holo_part, ZERO);
    }

    #[test]
    fn l_star_of_j() {
        let j = build_j(40).unwrap();
        let v = l_star(&j, 0.0).unwrap();
        assert!((v.value - c(-50.354862165668, -PI)).norm() < 1e-9, "{v:?}");
        let v1 = l_star(&j, 1.0).unwrap();
        assert!((v1.value - cplx::re(-20.4362404482161)).norm() < 1e-9);
        let t = l_tilde(&j, 0.0).unwrap();
        assert!((t.value - 2.0 * v.value).norm() < 1e-12);
    }

    #[test]
    fn vertical_integral_agrees() {
        let j = build_j(40).unwrap();
        let phi = TestFunction::phi_sw(0.0, cplx::re(30.0));
        let a = l_value(&j, &phi).unwrap().value;
        let b = l_value_by_vertical_integral(&j, &phi).unwrap().value;
        assert!(
            (a - b).norm() < 1e-8 * a.norm().max(1e-30) + 1e-20,
            "{a} vs {b}"
        );
        let cmp = TestFunction::compact(
            1.0,
            2.0,
            AnalyticSeed::InversePower {
                power: 2,
                shift: 0.0,
            },
        )
        .unwrap();
        let a = l_value(&j, &cmp).unwrap().value;
        let b = l_value_by_vertical_integral(&j, &cmp).unwrap().value;
        assert!((a - b).norm() < 1e-9, "{a} vs {b}");
        assert!(matches!(
            l_value_by_vertical_integral(&j, &TestFunction::phi_sw(0.0, ONE)),
            Err(Error::Admissibility(_))
        ));
    }

    #[test]
    fn functional_equation_for_j() {
        let j = build_j(40).unwrap();
        let cfg = EvalConfig::default();
        for &s in &[0.0, 1.0, -0.5] {
            let sides = functional_equation_sides(&j, &j, cplx::re(s), c(30.0, 5.0), &cfg).unwrap();
            let d = (sides.lhs.value - sides.rhs_value()).norm();
            assert!(
                d < 1e-6 * (1.0 + sides.lhs.value.norm()),
                "s = {s}: {sides:?}"
            );
        }
        let synth = single(0, &[(1, 1.0)], &[]);
        assert!(matches!(
            functional_equation_sides(&synth, &synth, ZERO, c(30.0, 5.0), &cfg),
            Err(Error::Unsupported(_))
        ));
    }
}
