use super::{check_finite, Estimate, SpecFunConfig, EULER_GAMMA};
use crate::cplx::{self, as_integer, ONE, ZERO};
use crate::error::{Error, Result};
use alloc::format;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complete gamma function for complex argument.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if let Some(n) = as_integer(z) {
        if n <= 0 {
            return Err(Error::Pole {
                func: "gamma",
                detail: format!("{n}"),
            });
        }
        if n <= 20 {
            let f: f64 = (1..n).map(|k| k as f64).product();
            return Ok(cplx::re(f));
        }
    }
    check_finite("gamma", gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (cplx::re(PI) * z).sin();
        return cplx::re(PI) / (s * gamma_unchecked(ONE - z));
    }
    let z = z - 1.0;
    let mut x = cplx::re(LANCZOS[0]);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let sqrt_2pi = (2.0 * PI).sqrt();
    cplx::pow(t, z + 0.5) * (-t).exp() * x * sqrt_2pi
}

/// Upper incomplete gamma `Γ(r, z) = ∫_z^∞ e^{−t} t^{r−1} dt` on the principal branch.
pub fn inc_gamma_upper(r: Complex64, z: Complex64) -> Result<Complex64> {
    inc_gamma_upper_with(r, z, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn inc_gamma_upper_with(r: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    cfg.validate()?;
    let z = cplx::canon(z);
    if z == ZERO {
        if r.re <= 0.0 {
            return Err(Error::Domain {
                func: "inc_gamma_upper",
                detail: format!("z = 0 requires Re(r) > 0, got r = {r}"),
            });
        }
        let g = gamma(r)?;
        return Ok(Estimate::new(g, 1e-15 * g.norm()));
    }
    if -z.re > 700.0 {
        return Err(Error::Overflow("inc_gamma_upper"));
    }
    let est = if z.norm() + z.re <= cfg.series_switch_radius {
        match as_integer(r) {
            Some(n) if n <= 0 => series_nonpositive_integer(n, z, cfg)?,
            _ => series_generic(r, z, cfg)?,
        }
    } else {
        continued_fraction(r, z, cfg)?
    };
    Ok(Estimate::new(
        check_finite("inc_gamma_upper", est.value)?,
        est.err,
    ))
}

/// `Γ(r) − γ(r, z)`; the lower function uses the Kummer form with `e^{−z}` in
/// the right half-plane and the direct power series in the left half-plane.
fn series_generic(r: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    let g = gamma(r)?;
    let zr = cplx::pow(z, r);
    let (lower, abs_sum) = if z.re >= 0.0 {
        // γ(r, z) = z^r e^{−z} Σ z^k / (r (r+1) ... (r+k))
        let mut term = ONE / r;
        let mut sum = term;
        let mut abs_sum = term.norm();
        let mut k = 1usize;
        loop {
            term = term * z / (r + k as f64);
            sum += term;
            abs_sum += term.norm();
            if term.norm() <= 1e-17 * sum.norm() {
                break;
            }
            k += 1;
            if k > cfg.max_terms {
                return Err(Error::NonConvergence {
                    what: "lower incomplete gamma series",
                    limit: cfg.max_terms,
                });
            }
        }
        let scale = zr * (-z).exp();
        (scale * sum, scale.norm() * abs_sum)
    } else {
        // γ(r, z) = z^r Σ (−z)^k / (k! (r+k))
        let mut pw = ONE;
        let mut sum = ONE / r;
        let mut abs_sum = sum.norm();
        let mut k = 1usize;
        loop {
            pw = pw * (-z) / k as f64;
            let term = pw / (r + k as f64);
            sum += term;
            abs_sum += term.norm();
            if term.norm() <= 1e-17 * sum.norm() && k as f64 > z.norm() {
                break;
            }
            k += 1;
            if k > cfg.max_terms {
                return Err(Error::NonConvergence {
                    what: "lower incomplete gamma series",
                    limit: cfg.max_terms,
                });
            }
        }
        (zr * sum, zr.norm() * abs_sum)
    };
    let value = g - lower;
    let err = 4.0 * f64::EPSILON * (g.norm() + abs_sum) + cfg.target_abs_tol;
    Ok(Estimate::new(value, err))
}

/// `Γ(−n, z)` from `Γ(0, z) = −γ − Log z − Σ_{k≥1} (−z)^k/(k·k!)` and the
/// downward recurrence `Γ(a, z) = (Γ(a+1, z) − z^a e^{−z}) / a`.
fn series_nonpositive_integer(n: i64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    let mut pw = ONE;
    let mut sum = ZERO;
    let mut abs_sum = 0.0;
    let mut k = 1usize;
    loop {
        pw = pw * (-z) / k as f64;
        let term = pw / k as f64;
        sum += term;
        abs_sum += term.norm();
        if term.norm() <= 1e-17 * sum.norm().max(1e-300) && k as f64 > z.norm() {
            break;
        }
        k += 1;
        if k > cfg.max_terms {
            return Err(Error::NonConvergence {
                what: "Γ(0, z) series",
                limit: cfg.max_terms,
            });
        }
    }
    let log_z = cplx::ln(z);
    let mut value = -EULER_GAMMA - log_z - sum;
    let mut err = 4.0 * f64::EPSILON * (abs_sum + log_z.norm() + 1.0);
    let ez = (-z).exp();
    for a in (n..0).rev() {
        let a_f = a as f64;
        let zpow = cplx::powi(z, a as i32) * ez;
        value = (value - zpow) / a_f;
        err = (err + f64::EPSILON * zpow.norm()) / a_f.abs();
    }
    Ok(Estimate::new(value, err))
}

/// Legendre continued fraction
/// `Γ(r, z) = e^{−z} z^r / (z + (1−r)/(1 + 1/(z + (2−r)/(1 + 2/(z + …)))))`
/// evaluated bottom-up at increasing depth until two depths agree.
fn continued_fraction(r: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    let eval = |depth: usize| -> Complex64 {
        let mut f = z;
        for j in (1..=depth).rev() {
            let jf = j as f64;
            let g = ONE + jf / f;
            f = z + (cplx::re(jf) - r) / g;
        }
        f
    };
    let prefactor = (-z).exp() * cplx::pow(z, r);
    let mut depth = 32usize;
    let mut prev = eval(depth);
    loop {
        let next_depth = depth * 2;
        if next_depth > cfg.max_terms {
            return Err(Error::NonConvergence {
                what: "incomplete gamma continued fraction",
                limit: cfg.max_terms,
            });
        }
        let cur = eval(next_depth);
        let rel = (cur - prev).norm() / cur.norm();
        if rel <= 4.0 * f64::EPSILON {
            let value = prefactor / cur;
            let err = value.norm() * (rel + 8.0 * f64::EPSILON * (next_depth as f64).sqrt());
            return Ok(Estimate::new(value, err));
        }
        prev = cur;
        depth = next_depth;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn gamma_known_values() {
        assert!(close(
            gamma(cplx::re(0.5)).unwrap(),
            cplx::re(PI.sqrt()),
            1e-14
        ));
        assert!(close(gamma(cplx::re(5.0)).unwrap(), cplx::re(24.0), 1e-15));
        // Γ(−1/2) = −2√π
        assert!(close(
            gamma(cplx::re(-0.5)).unwrap(),
            cplx::re(-2.0 * PI.sqrt()),
            1e-14
        ));
        // |Γ(i)|² = π / sinh π
        let g = gamma(cplx::I).unwrap();
        assert!((g.norm_sqr() - PI / PI.sinh()).abs() < 1e-14);
        assert!(matches!(gamma(cplx::re(-3.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn upper_incomplete_examples() {
        let v = inc_gamma_upper(cplx::re(1.0), cplx::re(0.5)).unwrap();
        assert!((v.re - 0.606_530_659_7).abs() < 1e-10);
        let v = inc_gamma_upper(cplx::re(3.0), cplx::re(1.0)).unwrap();
        assert!((v.re - 1.839_397_205_9).abs() < 1e-10);
        let v = inc_gamma_upper(cplx::re(0.5), ZERO).unwrap();
        assert!((v.re - 1.772_453_850_9).abs() < 1e-10);
    }

    #[test]
    fn zero_argument_with_nonpositive_order_is_rejected() {
        assert!(matches!(
            inc_gamma_upper(cplx::re(0.0), ZERO),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            inc_gamma_upper(cplx::re(-1.5), ZERO),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn series_and_fraction_agree_near_switch() {
        let cfg = SpecFunConfig::default();
        for &(r, z) in &[(0.3, 2.0), (2.5, 1.9), (-0.7, 1.5), (1.5, 3.0)] {
            let a = series_generic(cplx::re(r), cplx::re(z), &cfg).unwrap();
            let b = continued_fraction(cplx::re(r), cplx::re(z), &cfg).unwrap();
            assert!(
                close(a.value, b.value, 1e-12),
                "r={r} z={z}: {} vs {}",
                a.value,
                b.value
            );
        }
    }
}
