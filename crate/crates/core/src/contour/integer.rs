use super::{form_at, i_pow, unit_segment, CuspSum};
use crate::config::EvalConfig;
use crate::cplx::{self, ZERO};
use crate::error::{Error, Result};
use crate::modforms::{xi_image, FourierExpansion};
use crate::quad::Quadrature;
use crate::specfun::{
    bernoulli_poly, bernoulli_poly_real, cal_ei_with, hurwitz_zeta_star_with, hurwitz_zeta_with,
    polygamma_with, Estimate,
};
use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

fn factorial(n: i64) -> f64 {
    (1..=n).map(|j| j as f64).product()
}

fn require_weakly_holomorphic(f: &FourierExpansion, what: &str) -> Result<()> {
    if f.is_weakly_holomorphic() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{what} applies to weakly holomorphic expansions; {} is harmonic",
            f.name
        )))
    }
}

/// `∫_i^{i+1} f(z) h(z) dz` with the truncation error of `f` folded in.
fn against<H>(
    f: &FourierExpansion,
    quad: &Quadrature,
    cfg: &EvalConfig,
    mut h: H,
) -> Result<Estimate>
where
    H: FnMut(Complex64) -> Result<Estimate>,
{
    unit_segment(quad, |z| {
        let (fz, fe) = form_at(f, z, cfg)?;
        let hz = h(z)?;
        Ok((fz * hz.value, fe * hz.value.norm() + fz.norm() * hz.err))
    })
}

/// Closed-form contour value at an integer `s = m`:
/// `i^{−m} ∫_i^{i+1} f(z) ζ*(1−m, z) dz`.
pub fn rhs_integer_value(f: &FourierExpansion, m: i64, cfg: &EvalConfig) -> Result<Estimate> {
    cfg.validate()?;
    require_weakly_holomorphic(f, "the integer-value formula")?;
    let quad = Quadrature::new(cfg.quad)?;
    let a = (1 - m) as f64;
    let r = against(f, &quad, cfg, |z| {
        hurwitz_zeta_star_with(a, z, &cfg.specfun)
    })?;
    Ok(Estimate::new(i_pow(-(m as f64)) * r.value, r.err))
}

/// `i^{−s} ∫_i^{i+1} f(z) ζ(1−s, z) dz` for `s < 0`.
pub fn rhs_negative_s(f: &FourierExpansion, s: f64, cfg: &EvalConfig) -> Result<Estimate> {
    cfg.validate()?;
    if !(s < 0.0) {
        return Err(Error::Regime(format!(
            "negative-s formula needs s < 0, got {s}"
        )));
    }
    require_weakly_holomorphic(f, "the negative-s formula")?;
    let quad = Quadrature::new(cfg.quad)?;
    let order = cplx::re(1.0 - s);
    let r = against(f, &quad, cfg, |z| hurwitz_zeta_with(order, z, &cfg.specfun))?;
    Ok(Estimate::new(i_pow(-s) * r.value, r.err))
}

/// The polygamma rewriting at an integer `s ≤ 0`, with the printed prefactor
/// `i^{2−s}/(−s)!` and the prefactor `i^{−s}(−1)^{1−s}/(−s)!` that follows
/// from `(−s)! ζ(1−s, z) = (−1)^{1−s} ψ^{(−s)}(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygammaForms {
    pub integral: Estimate,
    pub printed: Complex64,
    pub corrected: Complex64,
}

pub fn rhs_negative_s_polygamma(
    f: &FourierExpansion,
    s: i64,
    cfg: &EvalConfig,
) -> Result<PolygammaForms> {
    cfg.validate()?;
    if s > 0 {
        return Err(Error::Regime(format!(
            "polygamma form needs s ≤ 0, got {s}"
        )));
    }
    require_weakly_holomorphic(f, "the polygamma form")?;
    let quad = Quadrature::new(cfg.quad)?;
    let order = (-s) as u32;
    let r = against(f, &quad, cfg, |z| polygamma_with(order, z, &cfg.specfun))?;
    let fact = factorial(-s);
    let sign = if (1 - s) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(PolygammaForms {
        integral: r,
        printed: i_pow((2 - s) as f64) * r.value / fact,
        corrected: i_pow(-s as f64) * sign * r.value / fact,
    })
}

/// Pieces of the closed form for `L_f(φ_{1+m}^0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernTerms {
    /// `−i^{−m−1} ∫ f B_{m+1}(z)/(m+1) dz` (equal to `i ∫ f z dz` at `m = 0`).
    pub holo: Estimate,
    /// Remainder with the printed constants `c_{k,m}`, `d_{ℓ,j}` (the
    /// `+x` version at `m = 0`).
    pub printed_remainder: Estimate,
    /// `Σ_r e_r ∫_0^1 (ξ_k f^c)(x+i) B_r(x) dx`, the limit of `R(ix, 1+m)`.
    pub corrected_remainder: Estimate,
}

impl BernTerms {
    pub fn printed(&self) -> Complex64 {
        self.holo.value + self.printed_remainder.value
    }

    pub fn corrected(&self) -> Complex64 {
        self.holo.value + self.corrected_remainder.value
    }
}

/// `e_r = −m! Σ_{ℓ≤m} Σ_{j≤ℓ−k} (−1)^{ℓ−m−1} (ℓ−k)! (−i)^r / (ℓ! j! r!)`,
/// `r = m + 2 − k − j`, the coefficients of `∫ (ξ_k f^c) B_r` in
/// `lim_{x→0⁺} R(ix, 1+m)`.
pub fn integer_remainder_coefficients(k: i32, m: u32) -> Result<Vec<(usize, Complex64)>> {
    if k > 0 {
        return Err(Error::InvalidExpansion(format!(
            "weight {k} carries no non-holomorphic part"
        )));
    }
    let (k, m) = (k as i64, m as i64);
    let top = (m + 2 - k) as usize;
    let mut e = alloc::vec![ZERO; top + 1];
    for l in 0..=m {
        for j in 0..=(l - k) {
            let r = m + 2 - k - j;
            let sign = if (l - m - 1).rem_euclid(2) == 0 {
                1.0
            } else {
                -1.0
            };
            let mag = factorial(l - k) / (factorial(l) * factorial(j) * factorial(r));
            e[r as usize] += -factorial(m) * sign * mag * i_pow(-(r as f64));
        }
    }
    Ok(e.into_iter()
        .enumerate()
        .filter(|(_, c)| *c != ZERO)
        .collect())
}

fn c_km(k: i64, m: i64) -> Complex64 {
    let mut acc = ZERO;
    for l in 0..=m {
        acc += i_pow((k + m + 2 * l) as f64)
            * (factorial(m) * factorial(l - k) / (factorial(1 + m - k) * factorial(l)));
    }
    -acc
}

fn d_lj(k: i64, m: i64, l: i64, j: i64) -> f64 {
    let sign = if (j - 1).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    factorial(m) * sign * factorial(l - k)
        / (factorial(l) * factorial(j + l - k + 1) * factorial(1 - l + m - j))
}

/// Closed-form pieces for `L_f(φ_{1+m}^0)`, `m ≥ 0`.
pub fn bern_terms(f: &FourierExpansion, m: u32, cfg: &EvalConfig) -> Result<BernTerms> {
    cfg.validate()?;
    let quad = Quadrature::new(cfg.quad)?;
    let mi = m as i64;
    let holo = if m == 0 {
        let r = against(f, &quad, cfg, |z| Ok(Estimate::exact(z)))?;
        Estimate::new(cplx::I * r.value, r.err)
    } else {
        let n = (m + 1) as usize;
        let r = against(f, &quad, cfg, |z| {
            Ok(Estimate::exact(bernoulli_poly(n, z)? / n as f64))
        })?;
        Estimate::new(-i_pow(-(mi + 1) as f64) * r.value, r.err)
    };
    let xi = CuspSum::from_expansion(&xi_image(f, true));
    if xi.is_empty() {
        let zero = Estimate::exact(ZERO);
        return Ok(BernTerms {
            holo,
            printed_remainder: zero,
            corrected_remainder: zero,
        });
    }
    let k = f.weight as i64;
    if k > 0 {
        return Err(Error::InvalidExpansion(format!(
            "weight {k} carries no non-holomorphic part"
        )));
    }
    let xi_against = |h: &dyn Fn(Complex64) -> Result<Complex64>| -> Result<Estimate> {
        unit_segment(&quad, |z| Ok((xi.eval(z) * h(z)?, 0.0)))
    };
    let printed_remainder = if m == 0 {
        let n = (2 - k) as usize;
        let ik = i_pow(k as f64);
        let r = xi_against(&|z| Ok(ik * bernoulli_poly(n, z)? / n as f64 + z.re))?;
        Estimate::new(-r.value / (1 - k) as f64, r.err / (1 - k) as f64)
    } else {
        let n = (2 + mi - k) as usize;
        let c = c_km(k, mi);
        xi_against(&|z| {
            let mut acc = c * bernoulli_poly(n, z)? / n as f64;
            for l in 0..=mi {
                for j in 0..=(mi - l) {
                    acc -=
                        d_lj(k, mi, l, j) * bernoulli_poly_real((1 - l + mi - j) as usize, z.re)?;
                }
            }
            Ok(acc)
        })?
    };
    let coeffs = integer_remainder_coefficients(f.weight, m)?;
    let corrected = xi_against(&|z| {
        let mut acc = ZERO;
        for &(r, e) in &coeffs {
            acc += e * bernoulli_poly_real(r, z.re)?;
        }
        Ok(acc)
    })?;
    Ok(BernTerms {
        holo,
        printed_remainder,
        corrected_remainder: corrected,
    })
}

/// `2 Σ a(n) EI(2πn)`, whose real part is `2 Re L*(f, 0)`.
pub fn bfi_series(f: &FourierExpansion, cfg: &EvalConfig) -> Result<Estimate> {
    cfg.validate()?;
    require_weakly_holomorphic(f, "the EI series")?;
    let mut acc = ZERO;
    let mut err = 0.0;
    for (&n, &a) in &f.holo {
        if n == 0 || a == ZERO {
            continue;
        }
        let e = cal_ei_with(2.0 * PI * n as f64, &cfg.specfun)?;
        acc += a * e.value;
        err += a.norm() * e.err + 8.0 * f64::EPSILON * (a * e.value).norm();
    }
    if !f.finite_support && f.bound_const > 0.0 {
        // EI(x) ≤ e^{−x}/x for x > 0
        let start = f.max_index() + 1;
        for n in start..start + 10_000 {
            let x = 2.0 * PI * n as f64;
            let t = f.bound_const * (f.growth_const * (n as f64).sqrt() - x).exp() / x;
            err += t;
            if t < 1e-30 {
                break;
            }
        }
    }
    Ok(Estimate::new(2.0 * acc, 2.0 * err))
}
