use crate::cplx::{self, ONE, ZERO};
use crate::error::{Error, Result};
use crate::quad::Quadrature;
use crate::specfun::{exp_int_e_with, hurwitz_zeta_with, Estimate, SpecFunConfig};
use alloc::format;
use alloc::string::{String, ToString};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// Holomorphic seed `Φ` of a compactly supported test function
/// `φ(y) = Φ(iy)` on `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnalyticSeed {
    Zero,
    /// `Φ(z) = (z + shift)^{−power}`, whose translate sum is `ζ(power, z + shift)`.
    InversePower {
        power: u32,
        shift: f64,
    },
}

impl AnalyticSeed {
    pub fn from_name(name: &str) -> Result<Self> {
        match name.trim() {
            "zero" | "0" => Ok(Self::Zero),
            other => {
                let p = other
                    .strip_prefix("z^-")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Unsupported(format!("analytic seed `{other}`")))?;
                Ok(Self::InversePower {
                    power: p,
                    shift: 0.0,
                })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Zero => "zero".to_string(),
            Self::InversePower { power, shift } if *shift == 0.0 => format!("z^-{power}"),
            Self::InversePower { power, shift } => format!("(z+{shift})^-{power}"),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match *self {
            Self::Zero => ZERO,
            Self::InversePower { power, shift } => cplx::powi(z + shift, -(power as i32)),
        }
    }

    /// `Φ̃(z) = Σ_{n≥0} Φ(z + n)`.
    pub fn periodized(&self, z: Complex64, cfg: &SpecFunConfig) -> Result<Estimate> {
        match *self {
            Self::Zero => Ok(Estimate::exact(ZERO)),
            Self::InversePower { power, shift } => {
                if power < 2 {
                    return Err(Error::DecayViolation(format!(
                        "Σ Φ(z+n) diverges for Φ = {}",
                        self.name()
                    )));
                }
                hurwitz_zeta_with(cplx::re(power as f64), z + shift, cfg)
            }
        }
    }

    /// Checks `|Φ(z)| ≤ |z|^{−1−ε}` at sample points of the strip
    /// `lo ≤ Im z ≤ hi` far from the imaginary axis, where the translate sum
    /// needs it.
    pub fn check_decay(&self, lo: f64, hi: f64) -> Result<()> {
        let (eps, name) = match *self {
            Self::Zero => return Ok(()),
            Self::InversePower { power, .. } => ((power as f64 - 1.0) * 0.5, self.name()),
        };
        if !(eps > 0.0) {
            return Err(Error::DecayViolation(format!(
                "{name} does not decay faster than |z|^-1"
            )));
        }
        for &y in &[lo, 0.5 * (lo + hi), hi] {
            for &x in &[10.0, 100.0, 1000.0, 1e4] {
                let z = cplx::c(x, y);
                let lhs = self.eval(z).norm();
                let rhs = z.norm().powf(-1.0 - eps);
                if lhs > rhs {
                    return Err(Error::DecayViolation(format!(
                        "|Φ({z})| = {lhs:e} exceeds |z|^(-1-ε) = {rhs:e}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Symbolic test function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestFunction {
    /// `φ_s^w(t) = 1_{[1,∞)}(t) e^{−wt} t^{s−1}`.
    PhiSw { s: Complex64, w: Complex64 },
    /// `(φ_s^w |_a W_M)(t) = (Mt)^{−a} φ_s^w(1/(Mt))`, supported on `(0, 1/M]`.
    FrickePhiSw {
        s: Complex64,
        w: Complex64,
        a: i32,
        m: u32,
    },
    /// `φ(y) = Φ(iy)` on `[lo, hi]`, zero elsewhere.
    CompactAnalytic {
        lo: f64,
        hi: f64,
        seed: AnalyticSeed,
    },
}

impl TestFunction {
    pub fn phi_sw(s: f64, w: Complex64) -> Self {
        Self::PhiSw { s: cplx::re(s), w }
    }

    pub fn compact(lo: f64, hi: f64, seed: AnalyticSeed) -> Result<Self> {
        if !(0.0 < lo && lo < hi && hi.is_finite()) {
            return Err(Error::Admissibility(format!(
                "support [{lo}, {hi}] must satisfy 0 < lo < hi < ∞"
            )));
        }
        Ok(Self::CompactAnalytic { lo, hi, seed })
    }

    /// Support `[lo, hi]`; `hi` is infinite for `φ_s^w`.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            Self::PhiSw { .. } => (1.0, f64::INFINITY),
            Self::FrickePhiSw { m, .. } => (0.0, 1.0 / m as f64),
            Self::CompactAnalytic { lo, hi, .. } => (lo, hi),
        }
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        match *self {
            Self::PhiSw { s, w } => {
                if t < 1.0 {
                    ZERO
                } else {
                    (-w * t).exp() * cplx::pow(cplx::re(t), s - 1.0)
                }
            }
            Self::FrickePhiSw { s, w, a, m } => {
                if !(t > 0.0) || t > 1.0 / m as f64 {
                    return ZERO;
                }
                let mt = m as f64 * t;
                Self::PhiSw { s, w }.eval(1.0 / mt) * mt.powi(-a)
            }
            Self::CompactAnalytic { lo, hi, seed } => {
                if t < lo || t > hi {
                    ZERO
                } else {
                    seed.eval(cplx::c(0.0, t))
                }
            }
        }
    }

    /// Laplace transform `(ℒφ)(u) = ∫_0^∞ e^{−ut} φ(t) dt`.
    pub fn laplace(&self, u: f64, quad: &Quadrature, sf: &SpecFunConfig) -> Result<Estimate> {
        match *self {
            Self::PhiSw { s, w } => laplace_phi_sw_with(s, w, u, sf),
            Self::FrickePhiSw { s, w, a, m } => {
                // (1/M) ∫_1^∞ e^{−wt − u/(Mt)} t^{s+a−3} dt
                let mf = m as f64;
                let expo = s + (a - 3) as f64;
                let r = quad.integrate_to_infinity(
                    |t| Ok((-w * t - u / (mf * t)).exp() * cplx::pow(cplx::re(t), expo) / mf),
                    1.0,
                )?;
                Ok(Estimate::new(r.value, r.est_error))
            }
            Self::CompactAnalytic { lo, hi, seed } => {
                let r =
                    quad.integrate(|t| Ok(seed.eval(cplx::c(0.0, t)) * (-u * t).exp()), lo, hi)?;
                Ok(Estimate::new(r.value, r.est_error))
            }
        }
    }
}

/// `(ℒφ_s^w)(u) = E_{1−s}(u + w)`.
pub fn laplace_phi_sw(s: Complex64, w: Complex64, u: f64) -> Result<Complex64> {
    laplace_phi_sw_with(s, w, u, &SpecFunConfig::default()).map(|e| e.value)
}

pub fn laplace_phi_sw_with(
    s: Complex64,
    w: Complex64,
    u: f64,
    cfg: &SpecFunConfig,
) -> Result<Estimate> {
    let z = w + u;
    if z == ZERO {
        return Err(Error::Pole {
            func: "laplace_phi_sw",
            detail: format!("u + w = 0 (u = {u}, w = {w})"),
        });
    }
    exp_int_e_with(ONE - s, z, cfg)
}

/// Descriptor of `φ|_a W_M` for `φ = φ_s^w`.
pub fn fricke_transform_testfn(phi: &TestFunction, a: i32, m: u32) -> Result<TestFunction> {
    if m == 0 {
        return Err(Error::Config("Fricke level must be positive"));
    }
    match *phi {
        TestFunction::PhiSw { s, w } => Ok(TestFunction::FrickePhiSw { s, w, a, m }),
        other => Err(Error::Unsupported(format!(
            "Fricke transform of {other:?}; only φ_s^w has a closed form"
        ))),
    }
}

/// `(φ|_a W_M)(x) = (Mx)^{−a} φ(1/(Mx))` evaluated pointwise for any `φ`.
pub fn fricke_value(phi: &TestFunction, a: i32, m: u32, x: f64) -> Complex64 {
    let mx = m as f64 * x;
    phi.eval(1.0 / mx) * mx.powi(-a)
}
