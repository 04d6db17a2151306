use super::{form_at, i_pow, segment, unit_segment, CuspSum};
use crate::config::EvalConfig;
use crate::cplx::{self, I, ZERO};
use crate::error::{Error, Result};
use crate::extrapolate::{richardson_to_zero, ExtrapolationConfig};
use crate::modforms::{xi_image, FourierExpansion};
use crate::quad::{Quadrature, QuadratureConfig};
use crate::specfun::{exp_int_e_with, lerch_zeta_with, Estimate};
use alloc::format;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// Which of the two equivalent expressions of `R(w, s)` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RForm {
    /// `−Σ_{n<0} b(n)(−4πn)^{1−k} ∫_1^∞ e^{4πnt} t^{s−k} E_{1−s}((2πn+w)t) dt`.
    OneDim,
    /// `i^{−s} ∫_i^{i+1} ∫_1^∞ e^{itzw} t^{s−k} R_t(z, w) dt dz`.
    DoubleIntegral,
}

/// The remainder `R(w, s)` carried by the non-holomorphic part of `f`.
pub fn r_remainder(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    form: RForm,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    if f.nonholo.values().all(|b| *b == ZERO) {
        return Ok(Estimate::exact(ZERO));
    }
    if f.weight > 0 {
        return Err(Error::InvalidExpansion(format!(
            "weight {} carries no non-holomorphic part",
            f.weight
        )));
    }
    let quad = Quadrature::new(cfg.quad)?;
    match form {
        RForm::OneDim => {
            if w.im < 0.0 {
                return Err(Error::Regime(format!("R(w, s) needs Im w ≥ 0, got {w}")));
            }
            r_one_dim(f, s, w, &quad, cfg)
        }
        RForm::DoubleIntegral => {
            if !(w.im > 0.0) {
                return Err(Error::Regime(format!(
                    "the double-integral form of R(w, s) needs Im w > 0, got {w}"
                )));
            }
            r_double(f, s, w, &quad, cfg)
        }
    }
}

fn r_one_dim(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    quad: &Quadrature,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    let k = f.weight as f64;
    let order = cplx::re(1.0 - s);
    let mut acc = ZERO;
    let mut err = 0.0;
    for (&n, &b) in &f.nonholo {
        if b == ZERO {
            continue;
        }
        let nf = n as f64;
        let base = w + 2.0 * PI * nf;
        if base == ZERO {
            return Err(Error::Pole {
                func: "r_remainder",
                detail: format!("2πn + w = 0 at n = {n}"),
            });
        }
        let integrand = |t: f64| -> Result<Complex64> {
            // the integrand is below e^{−2π|n|t} there
            if 2.0 * PI * nf.abs() * t > 650.0 {
                return Ok(ZERO);
            }
            let e = exp_int_e_with(order, base * t, &cfg.specfun)?.value;
            Ok(e * (4.0 * PI * nf * t).exp() * t.powf(s - k))
        };
        let r = quad.integrate_to_infinity(integrand, 1.0)?;
        let c = -b * (-4.0 * PI * nf).powf(1.0 - k);
        acc += c * r.value;
        err += c.norm() * r.est_error;
    }
    Ok(Estimate::new(acc, err))
}

fn r_double(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    quad: &Quadrature,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    let g = CuspSum::from_expansion(&xi_image(f, true));
    let k = f.weight as f64;
    let sm1 = cplx::re(s - 1.0);
    let growth = (s - 1.0).max(0.0);
    let max_terms = cfg.specfun.max_terms;
    let inner = |z: Complex64| -> Result<(Complex64, f64)> {
        let r = quad.integrate_to_infinity(
            |t| {
                let pref = (I * t * z * w).exp() * t.powf(s - k);
                let bound = g.majorant(t) * pref.norm();
                let step = (I * t * w).exp();
                let decay = step.norm();
                let mut twist = cplx::re(1.0);
                let mut sum = ZERO;
                for m in 0..max_terms {
                    let mf = m as f64;
                    let zm = z + mf;
                    sum += g.eval(t * (2.0 * I - zm)) * cplx::pow(zm, sm1) * twist;
                    let base = zm.norm();
                    let ratio = decay * ((base + 1.0) / base).powf(growth);
                    let next = bound * twist.norm() * decay * (base + 1.0).powf(s - 1.0);
                    if ratio < 1.0 && next / (1.0 - ratio) < 1e-18 {
                        return Ok(pref * sum);
                    }
                    twist *= step;
                }
                Err(Error::NonConvergence {
                    what: "R_t translate sum",
                    limit: max_terms,
                })
            },
            1.0,
        )?;
        Ok((r.value, r.est_error))
    };
    let outer = unit_segment(quad, inner)?;
    let f = i_pow(-s);
    Ok(Estimate::new(f * outer.value, outer.err))
}

/// `i^{−s} ∫_i^{i+1} f(z) e^{iwz} ζ(1−s, w/2π, z) dz`.
///
/// `∫_i^{i+1} f = 0`, so the kernel's value at `i + 1/2` is subtracted; this
/// removes its `z`-independent pole part as `w → 0`.
fn lerch_term(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    quad: &Quadrature,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    let a = w / (2.0 * PI);
    let order = cplx::re(1.0 - s);
    let kernel = |z: Complex64| -> Result<Estimate> {
        let lz = lerch_zeta_with(order, a, z, &cfg.specfun)?;
        let e = (I * w * z).exp();
        Ok(Estimate::new(e * lz.value, e.norm() * lz.err))
    };
    let centre = kernel(I + 0.5)?;
    let mut peak = 0.0f64;
    for j in 0..=8 {
        peak = peak.max(form_at(f, I + j as f64 / 8.0, cfg)?.0.norm());
    }
    // rounding in the subtracted kernel sets the attainable accuracy
    let floor = 256.0 * f64::EPSILON * centre.value.norm() * peak;
    let relaxed;
    let quad = if floor > quad.config().abs_tol {
        relaxed = Quadrature::new(QuadratureConfig {
            abs_tol: floor,
            ..*quad.config()
        })?;
        &relaxed
    } else {
        quad
    };
    let r = unit_segment(quad, |z| {
        let (fz, fe) = form_at(f, z, cfg)?;
        let k = kernel(z)?;
        let g = k.value - centre.value;
        Ok((fz * g, fe * g.norm() + fz.norm() * (k.err + centre.err)))
    })?;
    Ok(Estimate::new(i_pow(-s) * r.value, r.err))
}

/// Contour side of `L_f(φ_s^w)`: the Lerch integral plus `R(w, s)` in the
/// double-integral form.
pub fn rhs_main_theorem(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    rhs_main_theorem_with(f, s, w, RForm::DoubleIntegral, cfg)
}

pub fn rhs_main_theorem_with(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    form: RForm,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    if w.im < 0.0 {
        return Err(Error::Regime(format!(
            "contour side needs Im w ≥ 0, got {w}"
        )));
    }
    let quad = Quadrature::new(cfg.quad)?;
    let first = lerch_term(f, s, w, &quad, cfg)?;
    let r = r_remainder(f, s, w, form, cfg)?;
    Ok(Estimate::new(first.value + r.value, first.err + r.err))
}

/// `lim_{x→0⁺}` of the contour side at `w = ix`, by extrapolation from
/// `x ∈ x0·2^{−j}`. Uses the one-dimensional remainder.
pub fn contour_limit_at_zero(
    f: &FourierExpansion,
    s: f64,
    cfg: &EvalConfig,
    ext: &ExtrapolationConfig,
) -> Result<Estimate> {
    richardson_to_zero(
        |x| rhs_main_theorem_with(f, s, cplx::c(0.0, x), RForm::OneDim, cfg),
        ext,
    )
}

/// Both sides of the unfolding of `∫_i^{i+K}` into unit translates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnfoldingCheck {
    /// `Σ_{j<K} ∫_{i+j}^{i+j+1} f(z) e^{iwz} z^{s−1} dz`.
    pub translates: Estimate,
    /// `∫_i^{i+1} f(z) e^{iwz} Σ_{m<K} e^{iwm} (z+m)^{s−1} dz`.
    pub folded: Estimate,
}

pub fn lerch_unfolding_check(
    f: &FourierExpansion,
    s: f64,
    w: Complex64,
    translates: usize,
    cfg: &EvalConfig,
) -> Result<UnfoldingCheck> {
    cfg.validate()?;
    let quad = Quadrature::new(cfg.quad)?;
    let sm1 = cplx::re(s - 1.0);
    let mut total = Estimate::exact(ZERO);
    for j in 0..translates {
        let z0 = I + j as f64;
        let piece = segment(
            &quad,
            |z| {
                let (fz, fe) = form_at(f, z, cfg)?;
                let g = (I * w * z).exp() * cplx::pow(z, sm1);
                Ok((fz * g, fe * g.norm()))
            },
            z0,
            z0 + 1.0,
        )?;
        total.value += piece.value;
        total.err += piece.err;
    }
    let folded = unit_segment(&quad, |z| {
        let (fz, fe) = form_at(f, z, cfg)?;
        let mut partial = ZERO;
        for m in 0..translates {
            let zm = z + m as f64;
            partial += (I * w * zm).exp() * cplx::pow(zm, sm1);
        }
        Ok((fz * partial, fe * partial.norm()))
    })?;
    Ok(UnfoldingCheck {
        translates: total,
        folded,
    })
}
