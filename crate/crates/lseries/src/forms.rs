//! Form descriptors: `J`, `Jsq` and `synth:<json>`.

use crate::error::{Error, Result};
use crate::values::Cplx;
use lseries_core::modforms::{build_j, build_jsq, synth_harmonic, FourierExpansion, DEFAULT_J_PRECISION};
use serde::Deserialize;
use std::collections::BTreeMap;

/// Inline synthetic expansion, `{"k": 0, "holo": {"1": 1}, "nonholo": {"-1": [1, 0]}}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthSpec {
    #[serde(default)]
    pub k: i32,
    #[serde(default)]
    pub holo: BTreeMap<String, Cplx>,
    #[serde(default)]
    pub nonholo: BTreeMap<String, Cplx>,
}

#[derive(Debug, Clone)]
pub enum FormDescriptor {
    J,
    Jsq,
    Synth(SynthSpec),
}

impl FormDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "J" => Ok(Self::J),
            "Jsq" => Ok(Self::Jsq),
            t => match t.strip_prefix("synth:") {
                Some(body) => serde_json::from_str(body)
                    .map(Self::Synth)
                    .map_err(|e| Error::Usage(format!("bad synthetic form `{body}`: {e}"))),
                None => Err(Error::Usage(format!("unknown form `{t}` (expected J, Jsq or synth:{{...}})"))),
            },
        }
    }

    /// Builds the expansion; `prec` applies to `J` and `Jsq` only.
    pub fn build(&self, prec: Option<i64>) -> Result<FourierExpansion> {
        let prec = prec.unwrap_or(DEFAULT_J_PRECISION);
        Ok(match self {
            Self::J => build_j(prec)?,
            Self::Jsq => build_jsq(prec)?,
            Self::Synth(s) => synth_harmonic(s.k, index_map(&s.holo)?, index_map(&s.nonholo)?)?,
        })
    }
}

fn index_map(m: &BTreeMap<String, Cplx>) -> Result<BTreeMap<i64, lseries_core::Complex64>> {
    m.iter()
        .map(|(n, c)| {
            n.trim()
                .parse::<i64>()
                .map(|n| (n, c.0))
                .map_err(|_| Error::Usage(format!("coefficient index `{n}` is not an integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert!(matches!(FormDescriptor::parse("J").unwrap(), FormDescriptor::J));
        let f = FormDescriptor::parse(r#"synth:{"k": -2, "holo": {"1": 2}, "nonholo": {"-1": [2, -1]}}"#)
            .unwrap()
            .build(None)
            .unwrap();
        assert_eq!(f.weight, -2);
        assert_eq!(f.nonholo[&-1], lseries_core::Complex64::new(2.0, -1.0));
        assert!(FormDescriptor::parse("K").is_err());
        assert!(FormDescriptor::parse(r#"synth:{"holo": {"x": 1}}"#).unwrap().build(None).is_err());
    }
}
