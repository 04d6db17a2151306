//! Special functions on the principal branch.
//!
//! Each kernel has a plain form returning the value under
//! [`SpecFunConfig::default`] and a `_with` form taking an explicit config and
//! returning an [`Estimate`] that carries an absolute error estimate.

mod bernoulli;
mod expint;
mod gamma;
mod polygamma;
mod zeta;

pub use bernoulli::{
    bernoulli_number, bernoulli_number_f64, bernoulli_poly, bernoulli_poly_coeffs,
    bernoulli_poly_real, MAX_BERNOULLI_INDEX,
};
pub use expint::{cal_ei, cal_ei_with, exp_int_e, exp_int_e_with};
pub use gamma::{gamma, inc_gamma_upper, inc_gamma_upper_with};
pub use polygamma::{digamma, polygamma, polygamma_with};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_star, hurwitz_zeta_star_with, hurwitz_zeta_with, lerch_zeta,
    lerch_zeta_with,
};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Tolerances and limits shared by the special-function kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunConfig {
    pub target_abs_tol: f64,
    pub target_rel_tol: f64,
    pub max_terms: usize,
    /// Power series are used for `E_s(z)` and `Γ(r, z)` when `|z| + Re z`
    /// is at most this value; the continued fraction otherwise.
    pub series_switch_radius: f64,
}

impl Default for SpecFunConfig {
    fn default() -> Self {
        Self {
            target_abs_tol: 1e-16,
            target_rel_tol: 1e-15,
            max_terms: 100_000,
            series_switch_radius: 4.0,
        }
    }
}

impl SpecFunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol > 0.0) || !(self.target_rel_tol > 0.0) {
            return Err(Error::Config("tolerances must be strictly positive"));
        }
        if self.max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1"));
        }
        if !(self.series_switch_radius >= 0.0) {
            return Err(Error::Config("series_switch_radius must be non-negative"));
        }
        Ok(())
    }
}

/// A value together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub err: f64,
}

impl Estimate {
    pub fn new(value: Complex64, err: f64) -> Self {
        Self { value, err }
    }

    pub fn exact(value: Complex64) -> Self {
        Self { value, err: 0.0 }
    }
}

pub(crate) fn check_finite(func: &'static str, v: Complex64) -> Result<Complex64> {
    if crate::cplx::is_finite(v) {
        Ok(v)
    } else {
        Err(Error::Overflow(func))
    }
}
