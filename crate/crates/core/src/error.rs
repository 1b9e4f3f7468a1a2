use thiserror::Error;

/// Errors raised by the constructors, parsers and bijections of this crate.
///
/// Parking failures are not errors; they are reported through
/// [`ParkingOutcome`](crate::parking::ParkingOutcome).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("preference entry {value} at position {position} is outside 1..={n}")]
    EntryOutOfRange { position: usize, value: usize, n: usize },

    #[error("preference is not weakly {0}")]
    NotMonotone(&'static str),

    #[error("invalid step word: {0}")]
    InvalidPath(String),

    #[error("path dips to height -{deficit}, below the allowed -{k}")]
    BoundExceeded { deficit: usize, k: usize },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("tree does not have the strict descending shape for n={n}, k={k}")]
    NotStrictShape { n: usize, k: usize },

    #[error("invalid dissection: {0}")]
    InvalidDissection(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(literal: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        literal: literal.to_string(),
        reason: reason.into(),
    }
}
