//! Error types shared across the crate.

use std::fmt;

/// Everything that can go wrong in this crate.
#[derive(Debug)]
pub enum Error {
    /// Division (or Euclidean division) by the zero element.
    DivisionByZero,
    /// An operation that requires a nonzero input received zero,
    /// e.g. `gcd(0, 0)` or a canonical associate of 0.
    ZeroInput(&'static str),
    /// A triple handed to `decompose` or `min_shift` has a zero component.
    ZeroComponent,
    /// A triple that was claimed to solve x^k + y^k = z^k does not.
    NotASolution,
    /// Malformed element text.
    Parse(ParseError),
    /// A generation cap was exceeded (e.g. patch iterations).
    CapExceeded { requested: u32, cap: u32 },
    /// A render marker lies outside the rendered interval.
    MarkerOutsideInterval(String),
    /// Filesystem failure while writing output or checkpoints.
    Io(std::io::Error),
    /// A state that the underlying theory rules out. Firing this is a bug.
    Internal(&'static str),
}

/// Parse failure with the byte offset of the offending character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroInput(op) => write!(f, "{op} requires a nonzero input"),
            Error::ZeroComponent => write!(f, "triple has a zero component"),
            Error::NotASolution => write!(f, "triple does not satisfy its power equation"),
            Error::Parse(e) => write!(f, "parse error: {e}"),
            Error::CapExceeded { requested, cap } => {
                write!(f, "requested {requested} iterations exceeds cap {cap}")
            }
            Error::MarkerOutsideInterval(label) => {
                write!(f, "marker {label:?} lies outside the rendered interval")
            }
            Error::Io(e) => write!(f, "i/o error: {e}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
