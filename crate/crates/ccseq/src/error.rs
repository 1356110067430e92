//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors reported by domain, construction and verification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A linear index does not fit the domain it was addressed into.
    #[error("index {index} out of range for domain of size {size}")]
    IndexOutOfRange { index: u64, size: u64 },

    /// A mixed-radix digit exceeds its radix.
    #[error("digit {digit} at position {position} exceeds radix {radix}")]
    DigitOutOfRange {
        digit: u32,
        radix: u32,
        position: usize,
    },

    /// Two operands live over different variable domains.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// Two operands use different phase moduli.
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    /// Sequence/array shapes disagree.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A constructor was handed inconsistent or out-of-range parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A shift was outside the range an operation accepts.
    #[error("shift out of range: {0}")]
    ShiftOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
