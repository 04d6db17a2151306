//! Polynomial extrapolation to `x = 0` from samples at `x0·2^{−j}`.

use crate::error::{Error, Result};
use crate::specfun::Estimate;
use alloc::vec::Vec;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtrapolationConfig {
    pub x0: f64,
    pub levels: usize,
}

impl Default for ExtrapolationConfig {
    fn default() -> Self {
        Self { x0: 3.0, levels: 8 }
    }
}

/// Neville–Aitken evaluation at `0` of the interpolant through
/// `(x_j, f(x_j))`, `x_j = x0·2^{−j}`. The error estimate is the change in the
/// last diagonal entry plus the propagated sample errors.
pub fn richardson_to_zero<F>(mut f: F, cfg: &ExtrapolationConfig) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<Estimate>,
{
    if cfg.levels < 2 || !(cfg.x0 > 0.0) {
        return Err(Error::Config(
            "extrapolation needs x0 > 0 and at least two levels",
        ));
    }
    let xs: Vec<f64> = (0..cfg.levels)
        .map(|j| cfg.x0 / (1u64 << j) as f64)
        .collect();
    let mut col: Vec<Complex64> = Vec::with_capacity(cfg.levels);
    let mut noise = 0.0f64;
    for &x in &xs {
        let e = f(x)?;
        col.push(e.value);
        noise = noise.max(e.err);
    }
    let mut diag_prev = col[0];
    let mut diag = col[0];
    for k in 1..cfg.levels {
        for i in (k..cfg.levels).rev() {
            let (xi, xik) = (xs[i], xs[i - k]);
            col[i] = (col[i - 1] * xi - col[i] * xik) / (xi - xik);
        }
        diag_prev = diag;
        diag = col[k];
    }
    // Lebesgue constant at 0 for halving nodes stays below 4
    Ok(Estimate::new(diag, (diag - diag_prev).norm() + 4.0 * noise))
}
