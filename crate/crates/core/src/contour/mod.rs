//! Contour-integral right-hand sides over the segment `[i, i+1]` and the
//! remainder term `R(w, s)` of the non-holomorphic part.

mod bend;
mod compact;
mod integer;
mod main_thm;

pub use crate::quad::{integrate_segment, QuadratureConfig, SegmentIntegral};
pub use bend::{ray_integral_bend, ray_integral_bend_tail_corrected, ray_tail_asymptotic};
pub use compact::compact_support_value;
pub use integer::{
    bern_terms, bfi_series, integer_remainder_coefficients, rhs_integer_value, rhs_negative_s,
    rhs_negative_s_polygamma, BernTerms, PolygammaForms,
};
pub use main_thm::{
    contour_limit_at_zero, lerch_unfolding_check, r_remainder, rhs_main_theorem,
    rhs_main_theorem_with, RForm, UnfoldingCheck,
};

use crate::config::EvalConfig;
use crate::cplx::{self, I, ZERO};
use crate::error::Result;
use crate::modforms::{eval_expansion_with, FourierExpansion};
use crate::quad::Quadrature;
use crate::specfun::Estimate;
use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// `∫_{z0}^{z1} g`, folding the integrand's own error bound into the estimate.
fn segment<G>(quad: &Quadrature, mut g: G, z0: Complex64, z1: Complex64) -> Result<Estimate>
where
    G: FnMut(Complex64) -> Result<(Complex64, f64)>,
{
    let mut worst = 0.0f64;
    let r = quad.integrate_segment(
        |z| {
            let (v, e) = g(z)?;
            worst = worst.max(e);
            Ok(v)
        },
        z0,
        z1,
    )?;
    Ok(Estimate::new(
        r.value,
        r.est_error + worst * (z1 - z0).norm(),
    ))
}

/// `∫_i^{i+1} g`.
fn unit_segment<G>(quad: &Quadrature, g: G) -> Result<Estimate>
where
    G: FnMut(Complex64) -> Result<(Complex64, f64)>,
{
    segment(quad, g, I, I + 1.0)
}

fn form_at(f: &FourierExpansion, z: Complex64, cfg: &EvalConfig) -> Result<(Complex64, f64)> {
    let v = eval_expansion_with(f, z, cfg.tail_tol)?;
    Ok((v.value, v.truncation_error))
}

/// Finite cusp-form expansion `Σ c(n) e^{2πinτ}` with a cheap majorant.
#[derive(Debug, Clone)]
struct CuspSum {
    terms: alloc::vec::Vec<(f64, Complex64)>,
}

impl CuspSum {
    fn from_expansion(g: &FourierExpansion) -> Self {
        Self {
            terms: g
                .holo
                .iter()
                .filter(|(_, c)| **c != ZERO)
                .map(|(&n, &c)| (n as f64, c))
                .collect(),
        }
    }

    fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn eval(&self, tau: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(n, c)| c * (2.0 * PI * n * I * tau).exp())
            .sum()
    }

    /// `Σ |c(n)| e^{−2πn y}`, a bound on `|g(τ)|` for `Im τ ≥ y`.
    fn majorant(&self, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(n, c)| c.norm() * (-2.0 * PI * n * y).exp())
            .sum()
    }
}

fn i_pow(a: f64) -> Complex64 {
    cplx::i_pow(a)
}
