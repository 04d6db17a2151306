//! Check specifications as read from a suite file.

use crate::error::{Error, Result};
use crate::forms::FormDescriptor;
use crate::values::Cplx;
use serde::{Deserialize, Serialize};

/// Environment variable that overrides [`DEFAULT_TOLERANCE`].
pub const TOLERANCE_ENV: &str = "LSERIES_DEFAULT_TOL";

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// The default tolerance, or the value of [`TOLERANCE_ENV`] when it parses
/// as a positive number.
pub fn default_tolerance() -> f64 {
    std::env::var(TOLERANCE_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<f64>().ok())
        .filter(|t| *t > 0.0 && t.is_finite())
        .unwrap_or(DEFAULT_TOLERANCE)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "thm_maincor")]
    MainCor,
    #[serde(rename = "thm_main")]
    Main,
    #[serde(rename = "prop_zag")]
    Zagier,
    #[serde(rename = "cor_bernWHF")]
    BernWeaklyHolomorphic,
    #[serde(rename = "thm_bern")]
    Bern,
    #[serde(rename = "cor_polyl")]
    Polylog,
    #[serde(rename = "cor_hurw")]
    Hurwitz,
    #[serde(rename = "prop_fe")]
    FunctionalEquation,
    #[serde(rename = "lemma_bend")]
    Bend,
    #[serde(rename = "lemma_integral_form")]
    IntegralForm,
    #[serde(rename = "sect6_compact")]
    CompactSupport,
    #[serde(rename = "r_form_equality")]
    RFormEquality,
    #[serde(rename = "bfi_consistency")]
    BfiConsistency,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Self::MainCor => "thm_maincor",
            Self::Main => "thm_main",
            Self::Zagier => "prop_zag",
            Self::BernWeaklyHolomorphic => "cor_bernWHF",
            Self::Bern => "thm_bern",
            Self::Polylog => "cor_polyl",
            Self::Hurwitz => "cor_hurw",
            Self::FunctionalEquation => "prop_fe",
            Self::Bend => "lemma_bend",
            Self::IntegralForm => "lemma_integral_form",
            Self::CompactSupport => "sect6_compact",
            Self::RFormEquality => "r_form_equality",
            Self::BfiConsistency => "bfi_consistency",
        }
    }

    fn needs_form(self) -> bool {
        self != Self::Bend
    }

    fn required(self) -> &'static [&'static str] {
        match self {
            Self::MainCor | Self::Main | Self::FunctionalEquation | Self::RFormEquality => &["s", "w"],
            Self::BernWeaklyHolomorphic | Self::Bern => &["m"],
            Self::Hurwitz => &["s"],
            Self::Bend => &["a", "w"],
            Self::CompactSupport => &["a", "b", "phi"],
            Self::Zagier | Self::Polylog | Self::IntegralForm | Self::BfiConsistency => &[],
        }
    }
}

/// Right-hand side used for the Bernoulli-type closed forms at `s = 1 + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BernRhs {
    /// Extrapolated `x → 0⁺` limit of the contour side at `w = ix`.
    #[default]
    Oracle,
    /// The closed form with its constants as printed.
    Printed,
    /// The closed form with the remainder coefficients re-derived from the limit.
    Corrected,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub s: Option<f64>,
    pub w: Option<Cplx>,
    pub m: Option<i64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    /// Analytic seed name for compactly supported test functions.
    pub phi: Option<String>,
    /// Ray length for `lemma_bend`.
    pub t: Option<f64>,
    pub tail_corrected: Option<bool>,
    /// Coefficient count for `J` and `Jsq`.
    pub prec: Option<i64>,
    pub rhs: Option<BernRhs>,
}

impl Params {
    fn has(&self, name: &str) -> bool {
        match name {
            "s" => self.s.is_some(),
            "w" => self.w.is_some(),
            "m" => self.m.is_some(),
            "a" => self.a.is_some(),
            "b" => self.b.is_some(),
            "phi" => self.phi.is_some(),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub id: String,
    pub theorem: Theorem,
    #[serde(default)]
    pub form: Option<String>,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

impl CheckSpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Usage(format!("check `{}`: {msg}", self.id)));
        if self.id.is_empty() {
            return Err(Error::Usage("check id must be non-empty".into()));
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0) || !t.is_finite() {
                return fail(format!("tolerance must be positive, got {t}"));
            }
        }
        match (&self.form, self.theorem.needs_form()) {
            (None, true) => return fail(format!("{} needs a form", self.theorem.id())),
            (Some(f), _) => {
                FormDescriptor::parse(f)?;
            }
            (None, false) => {}
        }
        for p in self.theorem.required() {
            if !self.params.has(p) {
                return fail(format!("{} needs parameter `{p}`", self.theorem.id()));
            }
        }
        if self.theorem == Theorem::IntegralForm {
            let compact = self.params.phi.is_some();
            let ok = if compact {
                self.params.a.is_some() && self.params.b.is_some()
            } else {
                self.params.s.is_some() && self.params.w.is_some()
            };
            if !ok {
                return fail("lemma_integral_form needs `s`, `w`, or `phi`, `a`, `b`".into());
            }
        }
        Ok(())
    }

    pub fn tolerance_or(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub checks: Vec<CheckSpec>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let s: CheckSpec = serde_json::from_str(
            r#"{"id": "x", "theorem": "cor_bernWHF", "form": "J", "params": {"m": 1}, "tolerance": 1e-7}"#,
        )
        .unwrap();
        assert_eq!(s.theorem, Theorem::BernWeaklyHolomorphic);
        s.validate().unwrap();
        let missing: CheckSpec =
            serde_json::from_str(r#"{"id": "y", "theorem": "thm_main", "form": "J", "params": {"s": 1}}"#).unwrap();
        assert!(missing.validate().is_err());
        let bad_tol: CheckSpec =
            serde_json::from_str(r#"{"id": "z", "theorem": "prop_zag", "form": "J", "tolerance": 0}"#).unwrap();
        assert!(bad_tol.validate().is_err());
        assert!(serde_json::from_str::<CheckSpec>(r#"{"id": "q", "theorem": "nope"}"#).is_err());
    }
}
