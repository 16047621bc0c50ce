//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the exact-arithmetic and localization pipeline.
///
/// `Input` and `Cap` mean the caller's arguments are unusable (CLI exit 2);
/// `Precision` and `Internal` mean an invariant of the computation itself
/// failed to hold (CLI exit 1).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller supplied invalid data.
    #[error("invalid input: {0}")]
    Input(String),
    /// A truncated series was read past its order.
    #[error("precision exceeded: {0}")]
    Precision(String),
    /// The request exceeds a feasibility cap.
    #[error("cap exceeded: {0}")]
    Cap(String),
    /// An exact identity failed to hold; this is a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
