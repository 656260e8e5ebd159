//! Error type shared by all operations in the crate.

use alloc::string::String;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Dimensions do not conform, or a constraint requires a shape the
    /// inputs do not have.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A NaN or infinite entry was handed to a boundary constructor.
    /// Non-finite values are rejected up front instead of being propagated.
    #[error("non-finite entry {value} at flat index {index}")]
    NonFinite { index: usize, value: f64 },

    /// A requested result would exceed an explicit size cap or overflow
    /// the platform index type.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The iterative SVD kernel did not converge within its sweep budget.
    #[error(
        "SVD did not converge after {sweeps} sweeps (worst off-diagonal ratio {max_off_ratio:e})"
    )]
    NonConvergence { sweeps: usize, max_off_ratio: f64 },

    /// Requested fixture name does not exist.
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}
