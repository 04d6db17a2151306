use super::{form_at, segment};
use crate::config::EvalConfig;
use crate::cplx::{self, I};
use crate::error::{Error, Result};
use crate::ltest::AnalyticSeed;
use crate::modforms::FourierExpansion;
use crate::quad::Quadrature;
use crate::specfun::Estimate;
use alloc::format;

/// `L_f(φ)` for `φ(y) = Φ(iy)` on `[a, b]`, telescoped to
/// `−i(∫_{ia}^{ia+1} f Φ̃ − ∫_{ib}^{ib+1} f Φ̃)` with `Φ̃(z) = Σ_{n≥0} Φ(z+n)`.
pub fn compact_support_value(
    f: &FourierExpansion,
    seed: &AnalyticSeed,
    a: f64,
    b: f64,
    cfg: &EvalConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    if !(0.0 < a && a < b && b.is_finite()) {
        return Err(Error::Admissibility(format!(
            "support [{a}, {b}] must satisfy 0 < a < b < ∞"
        )));
    }
    if !f.is_weakly_holomorphic() {
        return Err(Error::Unsupported(format!(
            "compact-support formula needs a weakly holomorphic {}",
            f.name
        )));
    }
    seed.check_decay(a, b)?;
    let quad = Quadrature::new(cfg.quad)?;
    let at = |y: f64| {
        let z0 = cplx::c(0.0, y);
        segment(
            &quad,
            |z| {
                let (fz, fe) = form_at(f, z, cfg)?;
                let p = seed.periodized(z, &cfg.specfun)?;
                Ok((fz * p.value, fe * p.value.norm() + fz.norm() * p.err))
            },
            z0,
            z0 + 1.0,
        )
    };
    let lo = at(a)?;
    let hi = at(b)?;
    Ok(Estimate::new(-I * (lo.value - hi.value), lo.err + hi.err))
}
