use crate::error::{Error, Result};
use alloc::boxed::Box;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::race::OnceBox;

/// Largest index for which Bernoulli numbers and polynomials are available.
pub const MAX_BERNOULLI_INDEX: usize = 64;

struct Table {
    numbers: Vec<BigRational>,
    /// `poly[n][j]` is the coefficient of `z^j` in `B_n(z)`.
    poly: Vec<Vec<f64>>,
}

static TABLE: OnceBox<Table> = OnceBox::new();

fn table() -> &'static Table {
    TABLE.get_or_init(|| Box::new(build_table()))
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 2);
    rows.push(alloc::vec![BigInt::one()]);
    for i in 1..=n + 1 {
        let prev = &rows[i - 1];
        let mut row = alloc::vec![BigInt::one(); i + 1];
        for k in 1..i {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

fn build_table() -> Table {
    let n_max = MAX_BERNOULLI_INDEX;
    let binom = binomials(n_max);
    // Σ_{k=0}^{n} C(n+1, k) B_k = 0, B_1 = −1/2.
    let mut numbers: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    numbers.push(BigRational::one());
    for n in 1..=n_max {
        let mut acc = BigRational::zero();
        for (k, b) in numbers.iter().enumerate() {
            if !b.is_zero() {
                acc += BigRational::from_integer(binom[n + 1][k].clone()) * b;
            }
        }
        numbers.push(-acc / BigRational::from_integer(BigInt::from(n as u64 + 1)));
    }
    let poly = (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    let c = BigRational::from_integer(binom[n][j].clone()) * &numbers[n - j];
                    c.to_f64().unwrap_or(f64::NAN)
                })
                .collect()
        })
        .collect();
    Table { numbers, poly }
}

fn check_index(n: usize) -> Result<()> {
    if n > MAX_BERNOULLI_INDEX {
        Err(Error::BernoulliRange(n))
    } else {
        Ok(())
    }
}

/// Exact Bernoulli number `B_n = B_n(0)`, with `B_1 = −1/2`.
pub fn bernoulli_number(n: usize) -> Result<BigRational> {
    check_index(n)?;
    Ok(table().numbers[n].clone())
}

pub fn bernoulli_number_f64(n: usize) -> Result<f64> {
    check_index(n)?;
    Ok(table().poly[n][0])
}

/// Exact coefficients of `B_n(z)`, lowest degree first.
pub fn bernoulli_poly_coeffs(n: usize) -> Result<Vec<BigRational>> {
    check_index(n)?;
    let numbers = &table().numbers;
    let binom = binomials(n);
    Ok((0..=n)
        .map(|j| BigRational::from_integer(binom[n][j].clone()) * &numbers[n - j])
        .collect())
}

/// Bernoulli polynomial `B_n(z)` by Horner's rule on the cached coefficients.
pub fn bernoulli_poly(n: usize, z: Complex64) -> Result<Complex64> {
    check_index(n)?;
    let coeffs = &table().poly[n];
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    Ok(acc)
}

pub fn bernoulli_poly_real(n: usize, x: f64) -> Result<f64> {
    check_index(n)?;
    Ok(table().poly[n]
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * x + c))
}
