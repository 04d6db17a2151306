use super::{bernoulli_number_f64, check_finite, Estimate, SpecFunConfig};
use crate::cplx::{self, as_integer, ZERO};
use crate::error::{Error, Result};
use alloc::format;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const ASYMPTOTIC_TERMS: usize = 12;

/// Digamma `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    polygamma(0, z)
}

/// Polygamma `ψ^{(m)}(z)`.
pub fn polygamma(m: u32, z: Complex64) -> Result<Complex64> {
    polygamma_with(m, z, &SpecFunConfig::default()).map(|e| e.value)
}

/// Shift `z` right until `Re z ≥ 20 + m`, then apply the Stirling-type
/// asymptotic expansion with Bernoulli numbers.
pub fn polygamma_with(m: u32, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    cfg.validate()?;
    let z = cplx::canon(z);
    if !cplx::is_finite(z) {
        return Err(Error::Domain {
            func: "polygamma",
            detail: format!("z = {z}"),
        });
    }
    if let Some(n) = as_integer(z) {
        if n <= 0 {
            return Err(Error::Pole {
                func: "polygamma",
                detail: format!("z = {n}"),
            });
        }
    }
    if m > 40 {
        return Err(Error::Domain {
            func: "polygamma",
            detail: format!("order m = {m} too large"),
        });
    }
    let target = 20.0 + m as f64;
    let shift = (target - z.re).max(0.0).ceil() as usize;
    if shift > cfg.max_terms {
        return Err(Error::NonConvergence {
            what: "polygamma shift",
            limit: cfg.max_terms,
        });
    }
    let m_fact: f64 = (1..=m).map(|k| k as f64).product();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };

    // ψ^{(m)}(z) = ψ^{(m)}(z+N) − (−1)^m m! Σ_{k<N} (z+k)^{−m−1}
    let mut rec = ZERO;
    let mut abs_rec = 0.0;
    for k in 0..shift {
        let t = cplx::powi(z + k as f64, -(m as i32) - 1);
        rec += t;
        abs_rec += t.norm();
    }
    let w = z + shift as f64;
    let (asym, last) = if m == 0 {
        digamma_asymptotic(w)?
    } else {
        polygamma_asymptotic(m, w)?
    };
    let value = asym - sign * m_fact * rec;
    let err = last + 4.0 * f64::EPSILON * (asym.norm() + m_fact * abs_rec);
    Ok(Estimate::new(check_finite("polygamma", value)?, err))
}

/// `ψ(w) ~ ln w − 1/(2w) − Σ_k B_{2k} / (2k w^{2k})`.
fn digamma_asymptotic(w: Complex64) -> Result<(Complex64, f64)> {
    let w2_inv = (w * w).inv();
    let mut pw = w2_inv;
    let mut sum = cplx::ln(w) - w.inv() * 0.5;
    let mut last = 0.0;
    for k in 1..=ASYMPTOTIC_TERMS {
        let t = pw * (bernoulli_number_f64(2 * k)? / (2 * k) as f64);
        sum -= t;
        last = t.norm();
        pw *= w2_inv;
    }
    Ok((sum, last))
}

/// `ψ^{(m)}(w) ~ (−1)^{m+1} [ (m−1)!/w^m + m!/(2 w^{m+1}) + Σ_k B_{2k} (2k+m−1)!/((2k)! w^{2k+m}) ]`.
fn polygamma_asymptotic(m: u32, w: Complex64) -> Result<(Complex64, f64)> {
    let m_i = m as i32;
    let fact_m1: f64 = (1..m).map(|k| k as f64).product();
    let fact_m = fact_m1 * m as f64;
    let w_inv = w.inv();
    let w2_inv = w_inv * w_inv;
    let mut sum = cplx::powi(w_inv, m_i) * fact_m1 + cplx::powi(w_inv, m_i + 1) * (0.5 * fact_m);
    let mut pw = cplx::powi(w_inv, m_i) * w2_inv;
    let mut last = 0.0;
    for k in 1..=ASYMPTOTIC_TERMS {
        let two_k = 2 * k as u32;
        let ratio: f64 = (two_k + 1..two_k + m).map(|j| j as f64).product();
        let t = pw * (bernoulli_number_f64(two_k as usize)? * ratio);
        sum += t;
        last = t.norm();
        pw *= w2_inv;
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok((sum * sign, last))
}
