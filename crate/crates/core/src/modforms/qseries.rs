use crate::error::{Error, Result};
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Precision marker for a series known exactly (a Laurent polynomial).
pub const EXACT: i64 = i64::MAX;

/// Truncated Laurent series in `q` with exact rational coefficients.
///
/// Coefficients at exponents below `precision` are exact; those not stored
/// explicitly are zero. Nothing at or above `precision` is ever read.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    min_exponent: i64,
    coeffs: Vec<BigRational>,
    precision: i64,
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^{}", self.min_exponent + i as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        if self.precision == EXACT {
            write!(f, ")")
        } else {
            write!(f, " + O(q^{}))", self.precision)
        }
    }
}

impl QSeries {
    /// Builds a series from coefficients starting at `min_exponent`; entries at
    /// or beyond `precision` are dropped and leading zeros are stripped.
    pub fn new(min_exponent: i64, coeffs: Vec<BigRational>, precision: i64) -> Result<Self> {
        if precision < min_exponent {
            return Err(Error::PrecisionUnderflow {
                precision,
                min_exponent,
            });
        }
        let mut s = Self {
            min_exponent,
            coeffs,
            precision,
        };
        s.normalize();
        Ok(s)
    }

    pub fn from_integers(min_exponent: i64, coeffs: &[i64], precision: i64) -> Result<Self> {
        Self::new(
            min_exponent,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
            precision,
        )
    }

    /// Exact Laurent polynomial.
    pub fn polynomial(min_exponent: i64, coeffs: &[i64]) -> Self {
        Self::from_integers(min_exponent, coeffs, EXACT).expect("exact precision never underflows")
    }

    pub fn zero(precision: i64) -> Self {
        Self {
            min_exponent: precision.min(0),
            coeffs: Vec::new(),
            precision,
        }
    }

    fn normalize(&mut self) {
        if self.precision != EXACT {
            let keep = (self.precision - self.min_exponent).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.min_exponent += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.min_exponent = if self.precision == EXACT {
                    0
                } else {
                    self.precision.min(self.min_exponent)
                };
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a stored coefficient.
    pub fn max_stored_exponent(&self) -> i64 {
        self.min_exponent + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `q^n`; an error at or above the precision.
    pub fn coeff(&self, n: i64) -> Result<BigRational> {
        if n >= self.precision {
            return Err(Error::PrecisionUnderflow {
                precision: self.precision,
                min_exponent: n,
            });
        }
        if n < self.min_exponent {
            return Ok(BigRational::zero());
        }
        Ok(self
            .coeffs
            .get((n - self.min_exponent) as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    /// `(n, a_n)` for every stored nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exponent + i as i64, c))
    }

    pub fn truncate(&self, precision: i64) -> Result<Self> {
        let p = precision.min(self.precision);
        let mut out = self.clone();
        if p < self.min_exponent && !self.is_zero() {
            return Err(Error::PrecisionUnderflow {
                precision: p,
                min_exponent: self.min_exponent,
            });
        }
        out.precision = p;
        out.normalize();
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = &*x * c;
        }
        out.normalize();
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Result<Self> {
        let precision = self.precision.min(rhs.precision);
        let lo = self.min_exponent.min(rhs.min_exponent);
        let hi_stored = self.max_stored_exponent().max(rhs.max_stored_exponent());
        let hi = if precision == EXACT {
            hi_stored
        } else {
            (precision - 1).min(hi_stored)
        };
        if precision < lo {
            return Err(Error::PrecisionUnderflow {
                precision,
                min_exponent: lo,
            });
        }
        let mut coeffs = Vec::new();
        for n in lo..=hi {
            let a = self.stored(n);
            let b = rhs.stored(n);
            coeffs.push(if negate { a - b } else { a + b });
        }
        Self::new(lo, coeffs, precision)
    }

    fn stored(&self, n: i64) -> BigRational {
        if n < self.min_exponent {
            return BigRational::zero();
        }
        self.coeffs
            .get((n - self.min_exponent) as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Product, exact below `min(p_a + m_b, p_b + m_a)`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let min_exponent = self.min_exponent + rhs.min_exponent;
        let precision = self
            .precision
            .saturating_add(rhs.min_exponent)
            .min(rhs.precision.saturating_add(self.min_exponent));
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(precision));
        }
        if precision < min_exponent {
            return Err(Error::PrecisionUnderflow {
                precision,
                min_exponent,
            });
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = if precision == EXACT {
            full
        } else {
            full.min((precision - min_exponent) as usize)
        };
        let mut coeffs = alloc::vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::new(min_exponent, coeffs, precision)
    }

    /// Multiplicative inverse; needs a finite precision.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        if self.precision == EXACT {
            return Err(Error::InvalidExpansion(
                "inverting a Laurent polynomial needs a finite precision; truncate first"
                    .to_string(),
            ));
        }
        let e0 = self.min_exponent;
        let len = (self.precision - e0) as usize;
        let a0_inv = BigRational::one() / &self.coeffs[0];
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        out.push(a0_inv.clone());
        for n in 1..len {
            let mut acc = BigRational::zero();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[n - k];
                }
            }
            out.push(-acc * &a0_inv);
        }
        Self::new(-e0, out, self.precision - 2 * e0)
    }

    /// Integer power; negative exponents go through [`QSeries::invert`].
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.invert()?.pow(-n);
        }
        let mut result = Self::polynomial(0, &[1]);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Whether every stored coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeff(&self, n: i64) -> Result<BigInt> {
        let c = self.coeff(n)?;
        if !c.is_integer() {
            return Err(Error::InvalidExpansion(format!(
                "coefficient of q^{n} is not an integer: {c}"
            )));
        }
        Ok(c.to_integer())
    }
}
