use super::{bernoulli_number_f64, check_finite, polygamma_with, Estimate, SpecFunConfig};
use crate::cplx::{self, as_integer, ONE, ZERO};
use crate::error::{Error, Result};
use alloc::format;
use alloc::string::ToString;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const EM_SHIFT_TARGET: f64 = 15.0;
const EM_ORDER: usize = 8;

fn check_z(func: &'static str, z: Complex64) -> Result<Complex64> {
    let z = cplx::canon(z);
    if !cplx::is_finite(z) || (z.im == 0.0 && z.re <= 0.0) {
        return Err(Error::Domain {
            func,
            detail: format!("z = {z} lies on (−∞, 0]"),
        });
    }
    Ok(z)
}

/// Hurwitz zeta `ζ(s, z) = Σ_{m≥0} (z+m)^{−s}`, continued in `s` by
/// Euler–Maclaurin summation. `z` may be any point off `(−∞, 0]`.
pub fn hurwitz_zeta(s: Complex64, z: Complex64) -> Result<Complex64> {
    hurwitz_zeta_with(s, z, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn hurwitz_zeta_with(s: Complex64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    cfg.validate()?;
    let z = check_z("hurwitz_zeta", z)?;
    if s == ONE {
        return Err(Error::Pole {
            func: "hurwitz_zeta",
            detail: "s = 1".to_string(),
        });
    }
    let nonpositive = matches!(as_integer(s), Some(m) if m <= 0);
    // At s = −m the Euler–Maclaurin series terminates, so no shift is needed.
    let (shift, order) = if nonpositive {
        let m = (-s.re) as usize;
        (0usize, EM_ORDER.max(m / 2 + 1))
    } else {
        let need = (EM_SHIFT_TARGET - z.re)
            .max(s.norm() - z.re)
            .max(0.0)
            .ceil() as usize;
        (need, EM_ORDER)
    };
    if shift > cfg.max_terms {
        return Err(Error::NonConvergence {
            what: "Hurwitz zeta shift",
            limit: cfg.max_terms,
        });
    }
    let mut sum = ZERO;
    let mut abs_sum = 0.0;
    for k in 0..shift {
        let t = cplx::pow(z + k as f64, -s);
        sum += t;
        abs_sum += t.norm();
    }
    let n = z + shift as f64;
    let n_pow = cplx::pow(n, -s);
    let head = n * n_pow / (s - 1.0) + n_pow * 0.5;
    sum += head;
    abs_sum += head.norm();
    // Σ_j B_{2j}/(2j)! (s)_{2j−1} N^{−s−2j+1}
    let n_inv2 = (n * n).inv();
    let mut poch = s;
    let mut pw = n_pow / n;
    let mut fact = 2.0;
    let mut last = 0.0;
    for j in 1..=order {
        let term = poch * pw * (bernoulli_number_f64(2 * j)? / fact);
        sum += term;
        abs_sum += term.norm();
        last = term.norm();
        let a = s + (2 * j - 1) as f64;
        poch = poch * a * (a + 1.0);
        pw *= n_inv2;
        fact *= ((2 * j + 1) * (2 * j + 2)) as f64;
        if poch == ZERO {
            last = 0.0;
            break;
        }
    }
    let err = last + 4.0 * f64::EPSILON * abs_sum;
    Ok(Estimate::new(check_finite("hurwitz_zeta", sum)?, err))
}

/// Constant term of the Laurent expansion of `ζ(s, z)` at `s = a`:
/// `ζ(a, z)` for `a ≠ 1` and `−ψ(z)` at `a = 1`.
pub fn hurwitz_zeta_star(a: f64, z: Complex64) -> Result<Complex64> {
    hurwitz_zeta_star_with(a, z, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn hurwitz_zeta_star_with(a: f64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    if a == 1.0 {
        let psi = polygamma_with(0, z, cfg)?;
        return Ok(Estimate::new(-psi.value, psi.err));
    }
    hurwitz_zeta_with(cplx::re(a), z, cfg)
}

/// Lerch zeta `ζ(s, a, z) = Σ_{m≥0} e^{2πima} (z+m)^{−s}`.
///
/// Requires `Im a > 0` (any `s`), or real `a` with `Re s > 1`. Integer real
/// `a` reduces to the Hurwitz function.
pub fn lerch_zeta(s: Complex64, a: Complex64, z: Complex64) -> Result<Complex64> {
    lerch_zeta_with(s, a, z, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn lerch_zeta_with(
    s: Complex64,
    a: Complex64,
    z: Complex64,
    cfg: &SpecFunConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    let z = check_z("lerch_zeta", z)?;
    if a.im < 0.0 {
        return Err(Error::Domain {
            func: "lerch_zeta",
            detail: format!("Im a < 0 (a = {a})"),
        });
    }
    if a.im > 0.0 {
        return lerch_geometric(s, a, z, cfg);
    }
    if !(s.re > 1.0) {
        return Err(Error::Domain {
            func: "lerch_zeta",
            detail: format!("real a = {} needs Re s > 1, got s = {s}", a.re),
        });
    }
    if a.re == a.re.round() {
        return hurwitz_zeta_with(s, z, cfg);
    }
    lerch_real_twist(s, a.re, z, cfg)
}

fn lerch_geometric(
    s: Complex64,
    a: Complex64,
    z: Complex64,
    cfg: &SpecFunConfig,
) -> Result<Estimate> {
    let q = (Complex64::new(0.0, 2.0 * PI) * a).exp();
    let qn = q.norm();
    let growth = (-s.re).max(0.0);
    let mut qm = ONE;
    let mut sum = ZERO;
    let mut abs_sum = 0.0;
    for m in 0..cfg.max_terms {
        let zm = z + m as f64;
        let term = qm * cplx::pow(zm, -s);
        sum += term;
        abs_sum += term.norm();
        // ratio of successive majorant terms once past the turning point
        let base = zm.norm();
        let ratio = qn * ((base + 1.0) / base).powf(growth);
        if ratio < 1.0 {
            let tail = term.norm() * ratio / (1.0 - ratio);
            if tail <= 0.25 * f64::EPSILON * sum.norm() || tail <= 0.1 * cfg.target_abs_tol {
                let err = tail + 4.0 * f64::EPSILON * abs_sum;
                return Ok(Estimate::new(check_finite("lerch_zeta", sum)?, err));
            }
        }
        qm *= q;
    }
    Err(Error::NonConvergence {
        what: "Lerch zeta summation",
        limit: cfg.max_terms,
    })
}

/// Real non-integer `a`: direct sum up to `N`, then the tail
/// `Σ_{m≥N} q^m g(m)` by repeated summation by parts,
/// `Σ_{j<K} q^N/(1−q) (q/(1−q))^j Δ^j g(N)` with `g(m) = (z+m)^{−s}`.
fn lerch_real_twist(s: Complex64, a: f64, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
    const K: usize = 8;
    let big_n: usize = 256.max((2.0 * s.norm()) as usize);
    if big_n + K > cfg.max_terms {
        return Err(Error::NonConvergence {
            what: "Lerch zeta summation",
            limit: cfg.max_terms,
        });
    }
    let q = Complex64::new(0.0, 2.0 * PI * a).exp();
    let g = |m: usize| cplx::pow(z + m as f64, -s);
    let mut sum = ZERO;
    let mut abs_sum = 0.0;
    let mut qm = ONE;
    for m in 0..big_n {
        let t = qm * g(m);
        sum += t;
        abs_sum += t.norm();
        qm *= q;
    }
    let mut diffs: alloc::vec::Vec<Complex64> = (0..=K).map(|j| g(big_n + j)).collect();
    let r = q / (ONE - q);
    let mut coef = qm / (ONE - q);
    for _ in 0..K {
        let t = coef * diffs[0];
        sum += t;
        abs_sum += t.norm();
        for i in 0..diffs.len() - 1 {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        diffs.pop();
        coef *= r;
    }
    // |Δ^K g(m)| ≤ |(s)_K| (m + Re z)^{−Re s−K}; sum over m ≥ N.
    let mut poch = 1.0;
    for j in 0..K {
        poch *= (s + j as f64).norm();
    }
    let x0 = big_n as f64 + z.re - 1.0;
    let p = s.re + K as f64;
    let rem = coef.norm() * (ONE - q).norm() * poch * x0.powf(1.0 - p) / (p - 1.0)
        * (PI * s.im.abs()).exp();
    let err = rem + 4.0 * f64::EPSILON * (abs_sum + (1u64 << K) as f64);
    Ok(Estimate::new(check_finite("lerch_zeta", sum)?, err))
}
