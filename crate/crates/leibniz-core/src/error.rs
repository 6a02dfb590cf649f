//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by tensor operations, descriptor validation and JSON I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand dimensions do not match the algebra they are used with.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A basis-change matrix is not invertible.
    #[error("singular transformation matrix")]
    SingularTransform,

    /// An algebra descriptor violates one of its family's constraints.
    #[error("descriptor error: {0}")]
    Descriptor(String),

    /// An operation's precondition does not hold (e.g. a quotient by a
    /// subspace that is not a two-sided ideal).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed JSON payload.
    #[error("invalid payload: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
