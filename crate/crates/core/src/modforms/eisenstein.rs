use super::qseries::QSeries;
use crate::error::{Error, Result};
use crate::specfun::bernoulli_number;
use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn divisor_power_sum(n: u64, p: u32) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += BigInt::from(d).pow(p);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(p);
            }
        }
        d += 1;
    }
    acc
}

/// `E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) q^n` for `k ∈ {4, 6}`, exact below `prec`.
pub fn build_eisenstein(k: u32, prec: i64) -> Result<QSeries> {
    if k != 4 && k != 6 {
        return Err(Error::Unsupported(format!(
            "Eisenstein series of weight {k}"
        )));
    }
    if prec < 1 {
        return Err(Error::Config("Eisenstein precision must be at least 1"));
    }
    let bk = bernoulli_number(k as usize)?;
    let factor = -BigRational::from_integer(BigInt::from(2 * k)) / bk;
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(prec as usize);
    coeffs.push(BigRational::one());
    for n in 1..prec as u64 {
        coeffs.push(&factor * BigRational::from_integer(divisor_power_sum(n, k - 1)));
    }
    QSeries::new(0, coeffs, prec)
}

/// `Δ = (E_4³ − E_6²)/1728`, exact below `prec`.
pub fn build_delta(prec: i64) -> Result<QSeries> {
    if prec < 2 {
        return Err(Error::Config("Δ precision must be at least 2"));
    }
    let e4 = build_eisenstein(4, prec)?;
    let e6 = build_eisenstein(6, prec)?;
    let num = e4.pow(3)?.sub(&e6.pow(2)?)?;
    Ok(num.scale(&(BigRational::one() / BigRational::from_integer(BigInt::from(1728)))))
}

/// `J = E_4³/Δ − 744` with exact coefficients at exponents `−1 ..= prec − 1`.
pub fn build_j_series(prec: i64) -> Result<QSeries> {
    if prec < 2 {
        return Err(Error::Config("J precision must be at least 2"));
    }
    let base = prec + 2;
    let e4 = build_eisenstein(4, base)?;
    let j = e4.pow(3)?.mul(&build_delta(base)?.invert()?)?;
    let j = j.sub(&QSeries::polynomial(0, &[744]))?;
    debug_assert_eq!(j.precision(), prec);
    Ok(j)
}

/// `J² − c` where `c` is the constant term of `J²`, exact below `prec`.
pub fn build_jsq_series(prec: i64) -> Result<QSeries> {
    let j = build_j_series(prec + 1)?;
    let sq = j.mul(&j)?;
    let c0 = sq.coeff(0)?;
    let sq = sq.sub(&QSeries::new(0, alloc::vec![c0], super::qseries::EXACT)?)?;
    sq.truncate(prec)
}
