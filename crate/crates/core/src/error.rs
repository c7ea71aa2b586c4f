use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by evaluation, identity checks and zero location.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    /// Evaluation requested at a pole. The one-sided real limits are
    /// attached when they are known (e.g. `Z(s,a)` at `s = 1`).
    #[error("pole at s = {at}")]
    Pole {
        at: Complex64,
        limit_below: Option<f64>,
        limit_above: Option<f64>,
    },

    #[error("gamma function pole at {0}")]
    GammaPole(i64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("Bernoulli order {n} outside the exact table (max {max})")]
    UnsupportedOrder { n: usize, max: usize },

    #[error("modulus {0} not supported (max 100)")]
    UnsupportedModulus(u64),

    #[error("no closed form for {family} at a = {a}")]
    UnsupportedIdentity { family: String, a: String },

    #[error("denominator vanishes at s = {0}")]
    DenominatorZero(Complex64),

    #[error("boundary passes within {min_abs:e} of a zero; move the rectangle")]
    RepositionRectangle { min_abs: f64 },

    #[error("winding number did not stabilise after {samples} boundary samples")]
    RefinementFailure { samples: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, ZetaError>;

impl ZetaError {
    pub(crate) fn pole(at: Complex64) -> Self {
        ZetaError::Pole {
            at,
            limit_below: None,
            limit_above: None,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        ZetaError::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        ZetaError::InvalidArgument(msg.into())
    }
}
