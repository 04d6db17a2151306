use alloc::string::String;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("pole of {func} at {detail}")]
    Pole { func: &'static str, detail: String },

    #[error("{what} did not converge within {limit} steps")]
    NonConvergence { what: &'static str, limit: usize },

    #[error("overflow in {0}")]
    Overflow(&'static str),

    #[error(
        "precision underflow: result precision {precision} below minimum exponent {min_exponent}"
    )]
    PrecisionUnderflow { precision: i64, min_exponent: i64 },

    #[error("leading coefficient of the series is not invertible")]
    NotInvertible,

    #[error("constant term must vanish, found {0}")]
    ConstantTerm(String),

    #[error("invalid expansion: {0}")]
    InvalidExpansion(String),

    #[error("truncation bound {bound:e} exceeds tolerance {tol:e}")]
    InsufficientPrecision { bound: f64, tol: f64 },

    #[error("test function not admissible: {0}")]
    Admissibility(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("regime error: {0}")]
    Regime(String),

    #[error("decay condition violated: {0}")]
    DecayViolation(String),

    #[error("quadrature failed on [{lo}, {hi}]: {reason}")]
    Quadrature {
        lo: f64,
        hi: f64,
        reason: &'static str,
    },

    #[error("invalid configuration: {0}")]
    Config(&'static str),

    #[error("Bernoulli index {0} beyond the cached range")]
    BernoulliRange(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
