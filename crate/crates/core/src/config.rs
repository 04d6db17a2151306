use crate::error::Result;
use crate::quad::QuadratureConfig;
use crate::specfun::SpecFunConfig;

/// Tolerances shared by the L-series and contour evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub specfun: SpecFunConfig,
    pub quad: QuadratureConfig,
    /// Largest admissible bound on an omitted series tail.
    pub tail_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            specfun: SpecFunConfig::default(),
            quad: QuadratureConfig::default(),
            tail_tol: 1e-12,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        self.specfun.validate()?;
        self.quad.validate()?;
        if !(self.tail_tol > 0.0) {
            return Err(crate::error::Error::Config("tail_tol must be positive"));
        }
        Ok(())
    }
}
