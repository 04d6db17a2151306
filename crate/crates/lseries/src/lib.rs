//! Verification harness for the `lseries-core` evaluators: check
//! specifications, the suite runner with its JSON report, form descriptors
//! and the special-function invariant grid.

// `!(x <= tol)` deliberately treats NaN as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod check;
pub mod error;
pub mod forms;
pub mod grid;
pub mod spec;
pub mod suite;
pub mod values;

pub use check::{run_check, CheckReport, Status};
pub use error::{Error, Result};
pub use spec::{default_tolerance, CheckSpec, SuiteConfig, Theorem};
pub use suite::{default_suite, load_suite, parse_suite, run_suite, SuiteReport, Summary};
