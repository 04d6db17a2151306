use crate::cplx::{self, I, ONE};
use crate::error::{Error, Result};
use crate::quad::{Quadrature, QuadratureConfig, SegmentIntegral};
use crate::specfun::Estimate;
use alloc::format;
use num_complex::Complex64;

fn check_regime(a: f64, w: Complex64) -> Result<()> {
    if w.im > 0.0 || (w.im == 0.0 && w.re > 0.0 && a < 0.0) {
        return Ok(());
    }
    Err(Error::Regime(format!(
        "ray integral needs Im w > 0, or real w > 0 with a < 0; got a = {a}, w = {w}"
    )))
}

/// `∫_i^{i+T} e^{iwz} z^{a−1} dz` along `Im z = 1`, in unit panels.
pub fn ray_integral_bend(
    a: f64,
    w: Complex64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<SegmentIntegral> {
    check_regime(a, w)?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Config("ray length must be positive and finite"));
    }
    let quad = Quadrature::new(*cfg)?;
    let expo = cplx::re(a - 1.0);
    let g = |x: f64| {
        let z = I + x;
        Ok((I * w * z).exp() * cplx::pow(z, expo))
    };
    let mut out = SegmentIntegral::zero();
    let mut lo = 0.0;
    while lo < t {
        let hi = (lo + 1.0).min(t);
        let p = quad.integrate(g, lo, hi)?;
        out.value += p.value;
        out.est_error += p.est_error;
        out.panels_used += p.panels_used;
        lo = hi;
    }
    Ok(out)
}

/// Asymptotic value of `∫_{i+T}^{i+∞} e^{iwz} z^{a−1} dz` by repeated
/// integration by parts, `−e^{iwZ} Σ_j (−1)^j g^{(j)}(Z)/(iw)^{j+1}` with
/// `g(z) = z^{a−1}`, `Z = i + T`, stopped at the smallest term.
pub fn ray_tail_asymptotic(a: f64, w: Complex64, t: f64) -> Result<Estimate> {
    check_regime(a, w)?;
    let z = I + t;
    let iw = I * w;
    let lead = -(iw * z).exp();
    let mut deriv = cplx::pow(z, cplx::re(a - 1.0));
    let mut inv = ONE / iw;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    for j in 0..60 {
        let term = deriv * inv * if j % 2 == 0 { 1.0 } else { -1.0 };
        let mag = term.norm();
        if mag > last {
            break;
        }
        sum += term;
        last = mag;
        if mag <= 1e-18 * sum.norm() {
            break;
        }
        deriv = deriv * (a - 1.0 - j as f64) / z;
        inv /= iw;
    }
    Ok(Estimate::new(
        lead * sum,
        (lead.norm() * last).max(f64::EPSILON * (lead * sum).norm()),
    ))
}

/// Truncated ray integral plus the asymptotic tail beyond `T`.
pub fn ray_integral_bend_tail_corrected(
    a: f64,
    w: Complex64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    let head = ray_integral_bend(a, w, t, cfg)?;
    let tail = ray_tail_asymptotic(a, w, t)?;
    Ok(Estimate::new(
        head.value + tail.value,
        head.est_error + tail.err,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::c;
    use crate::specfun::exp_int_e;

    #[test]
    fn closed_form_limit() {
        // a = 1, w = 2i: i·E_0(2i) = e^{−2i}/2
        let cfg = QuadratureConfig::default();
        let v = ray_integral_bend(1.0, c(0.0, 2.0), 60.0, &cfg)
            .unwrap()
            .value;
        let want = (c(0.0, -2.0)).exp() * 0.5;
        assert!((v - want).norm() < 1e-12, "{v} vs {want}");
    }

    #[test]
    fn regime_gate() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            ray_integral_bend(0.5, cplx::re(1.0), 10.0, &cfg),
            Err(Error::Regime(_))
        ));
        assert!(matches!(
            ray_integral_bend(-1.0, cplx::re(-1.0), 10.0, &cfg),
            Err(Error::Regime(_))
        ));
    }

    #[test]
    fn tail_correction_on_the_real_axis() {
        let cfg = QuadratureConfig::default();
        let want = cplx::i_pow(-1.0) * exp_int_e(cplx::re(2.0), cplx::re(1.0)).unwrap();
        let v = ray_integral_bend_tail_corrected(-1.0, cplx::re(1.0), 200.0, &cfg).unwrap();
        assert!((v.value - want).norm() < 1e-10, "{v:?} vs {want}");
    }
}
