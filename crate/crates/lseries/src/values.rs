//! Complex numbers on the wire: `[re, im]`, or a bare real on input.

use lseries_core::Complex64;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cplx(pub Complex64);

impl From<Complex64> for Cplx {
    fn from(z: Complex64) -> Self {
        Self(z)
    }
}

impl Serialize for Cplx {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.0.re)?;
        t.serialize_element(&self.0.im)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Cplx {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Real(f64),
            Pair([f64; 2]),
        }
        match Wire::deserialize(d) {
            Ok(Wire::Real(x)) => Ok(Self(Complex64::new(x, 0.0))),
            Ok(Wire::Pair([re, im])) => Ok(Self(Complex64::new(re, im))),
            Err(_) => Err(de::Error::custom("expected a number or an [re, im] pair")),
        }
    }
}

/// Parses `re` or `re,im` as typed on the command line.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|_| format!("`{text}` is not a number or an RE,IM pair"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("`{text}` is not a number or an RE,IM pair")),
    }
}
