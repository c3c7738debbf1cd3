use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A weight or smoothness sequence violates its required ordering.
    #[error("monotonicity violated in {sequence} sequence at j={index}: {value} follows {previous}")]
    MonotonicityViolation {
        sequence: &'static str,
        index: usize,
        previous: f64,
        value: f64,
    },

    /// A parameter lies outside its admissible range.
    #[error("range violation: {message}")]
    RangeViolation { message: String },

    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {message}")]
    DomainError { message: String },

    /// A frequency vector's length does not match the requested dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A configured work or memory budget was exceeded.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: u64 },

    /// The requested box radius cannot certify the requested count.
    #[error("insufficient box: kmax={kmax} cannot certify the count at epsilon={epsilon}")]
    InsufficientBox { kmax: u64, epsilon: f64 },

    /// The requested quantity is undefined for these parameters.
    #[error("not applicable: {message}")]
    NotApplicable { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
