use thiserror::Error;

/// Errors raised by the library. Every variant is either an input problem or
/// a guard that refuses work beyond a configured size.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("size mismatch: partition of {partition} against {expected}")]
    SizeMismatch { partition: usize, expected: usize },

    #[error("order out of supported range: {what} requires n <= {max}, got {n}")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("shape {shape} has {size} cells, more than the level {level}")]
    ShapeTooLarge {
        shape: String,
        size: usize,
        level: usize,
    },

    #[error("index {value} out of range {min}..={max}")]
    OutOfRange {
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("span is not invariant: {0} leaves the given basis")]
    NotInvariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a size or bound guard rather than malformed
    /// input.
    pub fn is_bound_violation(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit { .. }
                | Error::ShapeTooLarge { .. }
                | Error::OutOfRange { .. }
                | Error::SizeMismatch { .. }
                | Error::OrderMismatch { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
