//! Error type shared by all simulator modules.

use thiserror::Error;

/// Errors produced by the channel model, distribution builders and the
/// security analysis.
#[derive(Debug, Error)]
pub enum Error {
    /// A CSV row could not be parsed.
    #[error("{path}:{line}: malformed row: {reason}")]
    Parse {
        path: String,
        line: usize,
        reason: String,
    },

    /// Input data failed a structural validation (monotonicity, length, range).
    #[error("invalid {what}: {reason}")]
    Validation { what: &'static str, reason: String },

    /// A query landed outside the tabulated wavelength domain.
    #[error("wavelength {lambda_nm} nm outside table domain [{min_nm}, {max_nm}] nm")]
    Domain {
        lambda_nm: f64,
        min_nm: f64,
        max_nm: f64,
    },

    /// A parameter combination is outside the model's validity range.
    #[error("model domain error: {reason}")]
    ModelDomain { reason: String },

    /// Moment matching of a fitted distribution missed its targets.
    #[error(
        "moment matching failed: target (m1={target_m1:.6e}, m2={target_m2:.6e}), \
         achieved (m1={got_m1:.6e}, m2={got_m2:.6e})"
    )]
    MomentMatch {
        target_m1: f64,
        target_m2: f64,
        got_m1: f64,
        got_m2: f64,
    },

    /// A quadrature did not converge or produced an invalid density.
    #[error("numeric failure in {what}: {reason}")]
    Numeric { what: &'static str, reason: String },

    /// Invalid protocol or hardware parameter.
    #[error("invalid parameter {name}: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// Configuration file problems (missing files, bad fields).
    #[error("config error at {field}: {reason}")]
    Config { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
