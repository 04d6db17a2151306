//! Numerical L-series of weakly holomorphic and harmonic Maass cusp forms,
//! evaluated through test functions, together with the contour-integral
//! expressions they are compared against.
//!
//! The crate is `no_std` (with `alloc`). Every evaluator is a pure function of
//! its arguments and an immutable configuration.

#![no_std]
// `num_traits::Float` imports carry `allow(unused_imports)`: when std is linked
// elsewhere in the build, inherent float methods shadow the trait.
// `!(x > 0.0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod config;
pub mod contour;
pub mod cplx;
pub mod error;
pub mod extrapolate;
pub mod ltest;
pub mod modforms;
pub mod quad;
pub mod specfun;

pub use config::EvalConfig;
pub use error::{Error, Result};
pub use num_complex::Complex64;
