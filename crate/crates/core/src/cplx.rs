//! Principal-branch helpers on top of [`Complex64`].
//!
//! Every non-integer power and logarithm in the crate goes through these so
//! that a value sitting on the negative real axis is always read as the limit
//! from the upper half-plane, `arg z = π`. A signed zero in the imaginary part
//! would otherwise flip the branch.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
pub const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
pub const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Replace `-0.0` in the imaginary part by `+0.0`.
#[inline]
pub fn canon(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[inline]
pub fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Principal logarithm, `Im ∈ (−π, π]`.
#[inline]
pub fn ln(z: Complex64) -> Complex64 {
    let z = canon(z);
    Complex64::new(z.norm().ln(), z.im.atan2(z.re))
}

/// Principal power `z^a = exp(a Log z)`; `0^a` is `0` for `Re a > 0`.
pub fn pow(z: Complex64, a: Complex64) -> Complex64 {
    if z == ZERO {
        return if a == ZERO { ONE } else { ZERO };
    }
    if a.im == 0.0 && a.re == a.re.round() && a.re.abs() <= 64.0 {
        return powi(z, a.re as i32);
    }
    (a * ln(z)).exp()
}

/// Principal power with a real exponent.
#[inline]
pub fn powf(z: Complex64, a: f64) -> Complex64 {
    pow(z, re(a))
}

/// Integer power by repeated squaring; exact branch-free.
pub fn powi(z: Complex64, n: i32) -> Complex64 {
    let mut base = if n < 0 { z.inv() } else { z };
    let mut e = n.unsigned_abs();
    let mut acc = ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// `i^a` on the principal branch, `exp(iπa/2)`.
pub fn i_pow(a: f64) -> Complex64 {
    let r = a - 4.0 * (a / 4.0).floor();
    if r == r.round() {
        return match r as i32 {
            0 => ONE,
            1 => I,
            2 => -ONE,
            _ => -I,
        };
    }
    let t = core::f64::consts::FRAC_PI_2 * a;
    Complex64::new(t.cos(), t.sin())
}

/// `i^a` for complex `a`.
pub fn i_powc(a: Complex64) -> Complex64 {
    if a.im == 0.0 {
        return i_pow(a.re);
    }
    (a * Complex64::new(0.0, core::f64::consts::FRAC_PI_2)).exp()
}

/// Returns `Some(n)` when `z` is exactly the integer `n`.
pub fn as_integer(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && z.re == z.re.round() && z.re.abs() < 1.0e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_axis_reads_from_above() {
        let z = Complex64::new(-2.0, -0.0);
        assert!((ln(z).im - core::f64::consts::PI).abs() < 1e-15);
        let h = powf(z, 0.5);
        assert!(h.re.abs() < 1e-15 && (h.im - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn i_pow_matches_exponential() {
        for k in -8..8 {
            let a = 0.25 * k as f64;
            let want = (Complex64::new(0.0, core::f64::consts::FRAC_PI_2 * a)).exp();
            assert!((i_pow(a) - want).norm() < 1e-15);
        }
    }

    #[test]
    fn powi_agrees_with_exp_log() {
        let z = c(0.3, 1.0);
        for n in -6..7 {
            let want = (re(n as f64) * ln(z)).exp();
            assert!((powi(z, n) - want).norm() < 1e-13);
        }
    }
}
