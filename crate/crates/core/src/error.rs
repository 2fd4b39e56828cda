//! Shared error type.

use std::fmt;

/// Errors surfaced by the numeric kernel, the series layer, and the audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Interval division by an enclosure that contains zero.
    DivisorStraddlesZero,
    /// Logarithm requested for a rational ≤ 0.
    NonPositiveArgument,
    /// Index outside an operation's domain (e.g. harmonic(0), series term i < 2).
    InvalidIndex { got: u64, min: u64 },
    /// No configuration within the implementation's caps reaches the
    /// requested accuracy.
    ParametersInsufficient { context: String },
    /// Rationality probe over an interval with an empty interior (lo = hi).
    EmptyInterior,
    /// Claim id outside the checker's domain.
    InvalidClaim { id: String },
    /// Series operation not defined for the given series family.
    UnsupportedSeries { op: &'static str, id: &'static str },
    /// Output could not be written.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisorStraddlesZero => {
                write!(f, "division by an enclosure that contains zero")
            }
            Error::NonPositiveArgument => {
                write!(f, "logarithm of a non-positive argument")
            }
            Error::InvalidIndex { got, min } => {
                write!(f, "index {got} is outside the domain (minimum {min})")
            }
            Error::ParametersInsufficient { context } => {
                write!(f, "parameters insufficient: {context}")
            }
            Error::EmptyInterior => {
                write!(f, "interval has no interior (lo = hi)")
            }
            Error::InvalidClaim { id } => {
                write!(f, "claim id {id:?} is outside this checker's domain")
            }
            Error::UnsupportedSeries { op, id } => {
                write!(f, "operation {op} is not defined for series {id}")
            }
            Error::Io(msg) => write!(f, "output error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
