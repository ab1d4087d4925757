use alloc::string::String;
use core::fmt;

/// Errors raised by constructors and consistency checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The one-line notation is not a bijection on 1..=n.
    InvalidPermutation(String),
    /// A root index (i, j) violates 1 <= i < j <= n.
    InvalidRoot(String),
    /// A wedge index is not a strictly increasing tuple in 1..=n.
    InvalidWedgeIndex(String),
    /// A weight has the wrong length or an inadmissible coordinate.
    InvalidWeight(String),
    /// Malformed textual input.
    Parse(String),
    /// Two independent computations of the same quantity disagree.
    /// This always indicates a bug, never bad input.
    Consistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::InvalidRoot(msg) => write!(f, "invalid root index: {msg}"),
            Error::InvalidWedgeIndex(msg) => write!(f, "invalid wedge index: {msg}"),
            Error::InvalidWeight(msg) => write!(f, "invalid weight: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Consistency(msg) => write!(f, "internal consistency violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
