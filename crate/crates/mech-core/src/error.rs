//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by constructors, the analytic engine, and the oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MechError {
    #[error("{field} must be finite, got {value}")]
    NonFinite { field: &'static str, value: f64 },

    #[error("{field} must be nonnegative, got {value}")]
    NegativeWidth { field: &'static str, value: f64 },

    #[error("pulse sequence must contain at least one pulse")]
    EmptySequence,

    #[error("capacity exceeded: {what} ({requested} exceeds limit {limit})")]
    CapacityExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("transform length {len} is not a power of two")]
    LengthNotPowerOfTwo { len: usize },

    #[error("pathway order {order} exceeds the quadrature order limit {max}")]
    OrderTooHigh { order: u32, max: u32 },

    #[error("quadrature budget exceeded: {evaluations} integrand evaluations (budget {budget})")]
    QuadratureBudgetExceeded { evaluations: u64, budget: u64 },

    #[error("invalid quadrature config: {0}")]
    InvalidQuadratureConfig(String),

    #[error("invalid transition label {0:?} (expected \"00\", \"01\", \"10\" or \"11\")")]
    InvalidTransition(String),
}

pub type Result<T> = std::result::Result<T, MechError>;
