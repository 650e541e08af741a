//! Library error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FilterLabError {
    /// Invalid configuration value; `field` names the offending entry.
    #[error("configuration error in `{field}`: {message}")]
    Config { field: String, message: String },

    /// Two objects were built on incompatible time grids.
    #[error("time grid mismatch: {0}")]
    GridMismatch(String),

    /// A vector or channel count differs from what the model requires.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The requested computation exceeds a configured resource budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A simulated state left the representable range.
    #[error("simulation produced a non-finite value at step {step}")]
    NumericBlowup { step: usize },

    /// Point-process events must be supplied in increasing time order.
    #[error("observed points are not sorted by time")]
    UnsortedPoints,

    /// The Galerkin basis fails to close under the required maps.
    #[error("galerkin basis not closed: dropped-mass fraction {dropped:.3e} exceeds tolerance {tolerance:.3e} for `{image}`")]
    BasisNotClosed {
        image: String,
        dropped: f64,
        tolerance: f64,
    },

    /// Kalman-Bucy oracle invoked on a model that is not declared linear.
    #[error("model `{0}` is not linear-Gaussian; no closed-form filter available")]
    NonLinearModel(String),

    /// A probability table does not sum to one.
    #[error("probability mass {0} is not 1 within 1e-12")]
    ProbabilityMass(f64),

    /// Requested evaluation time is not a stored checkpoint / grid point.
    #[error("time {0} is not on the evaluation grid")]
    TimeOffGrid(f64),
}

impl FilterLabError {
    pub fn config(field: &str, message: impl Into<String>) -> Self {
        FilterLabError::Config {
            field: field.to_string(),
            message: message.into(),
        }
    }
}
