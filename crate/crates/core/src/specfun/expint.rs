use super::{check_finite, gamma, Estimate, SpecFunConfig, EULER_GAMMA};
use crate::cplx::{self, as_integer, ONE, ZERO};
use crate::error::{Error, Result};
use alloc::format;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const TINY: f64 = 1e-300;

/// Generalised exponential integral `E_s(z) = z^{s−1} Γ(1−s, z)`.
///
/// On the negative real axis the value is the limit from the upper half-plane,
/// so `E_1(−x)` has imaginary part `−π`.
pub fn exp_int_e(s: Complex64, z: Complex64) -> Result<Complex64> {
    exp_int_e_with(s, z, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn exp_int_e_with(s: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    cfg.validate()?;
    let z = cplx::canon(z);
    if z == ZERO {
        return Err(Error::Domain {
            func: "exp_int_e",
            detail: format!("z = 0 (s = {s})"),
        });
    }
    if !cplx::is_finite(z) || !cplx::is_finite(s) {
        return Err(Error::Domain {
            func: "exp_int_e",
            detail: format!("non-finite argument s = {s}, z = {z}"),
        });
    }
    if -z.re > 700.0 {
        return Err(Error::Overflow("exp_int_e"));
    }
    if z.re > 740.0 {
        return Ok(Estimate::exact(ZERO));
    }
    let est = match as_integer(s) {
        Some(m) if m <= 0 => closed_form_nonpositive(m.unsigned_abs(), z),
        _ if z.norm() + z.re > cfg.series_switch_radius => continued_fraction(s, z, cfg)?,
        Some(n) => series_positive_integer(n as u64, z, cfg)?,
        None => series_generic(s, z, cfg)?,
    };
    Ok(Estimate::new(
        check_finite("exp_int_e", est.value)?,
        est.err,
    ))
}

/// `E_{−m}(z) = m! z^{−m−1} e^{−z} Σ_{l≤m} z^l / l!`.
fn closed_form_nonpositive(m: u64, z: Complex64) -> Estimate {
    let mut term = ONE;
    let mut sum = ONE;
    let mut abs_sum = 1.0;
    for l in 1..=m {
        term = term * z / l as f64;
        sum += term;
        abs_sum += term.norm();
    }
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    let pre = cplx::powi(z, -(m as i32) - 1) * (-z).exp() * fact;
    let value = pre * sum;
    Estimate::new(
        value,
        4.0 * f64::EPSILON * (m as f64 + 1.0) * pre.norm() * abs_sum,
    )
}

/// `E_s(z) = z^{s−1} Γ(1−s) − Σ_{k≥0} (−z)^k / (k! (1−s+k))` for `s ∉ ℕ`.
fn series_generic(s: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    let lead = cplx::pow(z, s - 1.0) * gamma(ONE - s)?;
    let (sum, abs_sum) = power_sum(s, z, None, cfg)?;
    let value = lead - sum;
    let err = 4.0 * f64::EPSILON * (lead.norm() + abs_sum);
    Ok(Estimate::new(value, err))
}

/// `E_n(z) = (−z)^{n−1}/(n−1)! (ψ(n) − Log z) − Σ_{k≠n−1} (−z)^k / (k! (1−n+k))`.
fn series_positive_integer(n: u64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    let harmonic: f64 = (1..n).map(|k| 1.0 / k as f64).sum();
    let psi_n = harmonic - EULER_GAMMA;
    let fact: f64 = (1..n).map(|k| k as f64).product();
    let lead = cplx::powi(-z, (n - 1) as i32) / fact * (cplx::re(psi_n) - cplx::ln(z));
    let (sum, abs_sum) = power_sum(cplx::re(n as f64), z, Some(n - 1), cfg)?;
    let value = lead - sum;
    let err = 4.0 * f64::EPSILON * (lead.norm() + abs_sum);
    Ok(Estimate::new(value, err))
}

fn power_sum(
    s: Complex64,
    z: Complex64,
    skip: Option<u64>,
    cfg: &SpecFunConfig,
) -> Result<(Complex64, f64)> {
    let mut pw = ONE;
    let mut sum = ZERO;
    let mut abs_sum = 0.0;
    let zn = z.norm();
    let mut k = 0u64;
    loop {
        if k > 0 {
            pw = pw * (-z) / k as f64;
        }
        if skip != Some(k) {
            let term = pw / (ONE - s + k as f64);
            sum += term;
            abs_sum += term.norm();
            if k as f64 > zn && term.norm() <= 0.25 * f64::EPSILON * sum.norm().max(TINY) {
                return Ok((sum, abs_sum));
            }
        }
        k += 1;
        if k as usize > cfg.max_terms {
            return Err(Error::NonConvergence {
                what: "exponential integral series",
                limit: cfg.max_terms,
            });
        }
    }
}

/// Even contraction of the Legendre fraction, modified Lentz:
/// `E_s(z) = e^{−z} / (z+s − 1·s/(z+s+2 − 2(s+1)/(z+s+4 − …)))`.
fn continued_fraction(s: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    let tiny = cplx::re(TINY);
    let mut b = z + s;
    let mut c = cplx::re(1.0 / TINY);
    let mut d = ONE / b;
    let mut h = d;
    for i in 1..=cfg.max_terms {
        let an = -(i as f64) * (s + (i - 1) as f64);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = tiny;
        }
        d = ONE / d;
        let del = d * c;
        h *= del;
        if (del - ONE).norm() <= f64::EPSILON {
            let value = (-z).exp() * h;
            let err = value.norm() * 8.0 * f64::EPSILON * (i as f64).sqrt();
            return Ok(Estimate::new(value, err));
        }
    }
    Err(Error::NonConvergence {
        what: "exponential integral continued fraction",
        limit: cfg.max_terms,
    })
}

/// `EI(w)`: `E_1(w)` for `w > 0` and the principal value `−Ei(−w)` for `w < 0`.
pub fn cal_ei(w: f64) -> Result<Complex64> {
    cal_ei_with(w, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn cal_ei_with(w: f64, cfg: &SpecFunConfig) -> Result<Estimate> {
    cfg.validate()?;
    if w == 0.0 || !w.is_finite() {
        return Err(Error::Domain {
            func: "cal_ei",
            detail: format!("w = {w}"),
        });
    }
    if w > 0.0 {
        return exp_int_e_with(ONE, cplx::re(w), cfg);
    }
    let x = -w;
    if x > 700.0 {
        return Err(Error::Overflow("cal_ei"));
    }
    // Ei(x) = γ + ln x + Σ_{k≥1} x^k / (k·k!)
    let mut pw = 1.0;
    let mut sum = 0.0;
    let mut k = 1usize;
    loop {
        pw *= x / k as f64;
        let term = pw / k as f64;
        sum += term;
        if k as f64 > x && term <= 0.25 * f64::EPSILON * sum {
            break;
        }
        k += 1;
        if k > cfg.max_terms {
            return Err(Error::NonConvergence {
                what: "Ei series",
                limit: cfg.max_terms,
            });
        }
    }
    let ei = EULER_GAMMA + x.ln() + sum;
    Ok(Estimate::new(
        cplx::re(-ei),
        4.0 * f64::EPSILON * (sum + x.ln().abs() + 1.0),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn trivial_values() {
        let v = exp_int_e(cplx::re(0.0), cplx::re(2.0)).unwrap();
        assert!((v.re - (-2.0f64).exp() / 2.0).abs() < 1e-15);
        let v = exp_int_e(ONE, ONE).unwrap();
        assert!((v.re - 0.219_383_934_395_520_3).abs() < 1e-15);
    }

    #[test]
    fn negative_axis_branch() {
        let v = exp_int_e(ONE, cplx::re(-1.0)).unwrap();
        assert!((v.re + 1.895_117_816_355_936_8).abs() < 1e-14);
        assert!((v.im + PI).abs() < 1e-14);
        let e = cal_ei(-1.0).unwrap();
        assert_eq!(e.im, 0.0);
        assert!((e.re + 1.895_117_816_355_936_8).abs() < 1e-14);
    }

    #[test]
    fn series_and_fraction_overlap() {
        let cfg = SpecFunConfig::default();
        for &(s, z) in &[
            (0.5, (2.5, 0.5)),
            (2.0, (1.8, -1.0)),
            (-1.5, (3.0, 2.0)),
            (1.0, (2.2, 0.0)),
        ] {
            let z = cplx::c(z.0, z.1);
            let s = cplx::re(s);
            let a = match as_integer(s) {
                Some(n) if n > 0 => series_positive_integer(n as u64, z, &cfg).unwrap(),
                _ => series_generic(s, z, &cfg).unwrap(),
            };
            let b = continued_fraction(s, z, &cfg).unwrap();
            assert!(
                (a.value - b.value).norm() < 1e-13 * (1.0 + b.value.norm()),
                "{s} {z}: {} {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn zero_argument_rejected() {
        assert!(matches!(exp_int_e(ONE, ZERO), Err(Error::Domain { .. })));
        assert!(matches!(cal_ei(0.0), Err(Error::Domain { .. })));
    }
}
