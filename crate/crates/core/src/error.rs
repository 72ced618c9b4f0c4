use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameters or input objects violate a documented precondition.
    InvalidInput(String),
    /// A configured cap or search budget would be exceeded.
    ResourceLimit {
        what: &'static str,
        limit: u128,
        requested: u128,
    },
    /// A construction produced an object that failed its own self-check.
    ConstructionBug(String),
    /// An existence step that should always succeed came up empty.
    AlgorithmInvariant(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::ResourceLimit {
                what,
                limit,
                requested,
            } => write!(f, "resource limit: {what} needs {requested}, cap is {limit}"),
            Error::ConstructionBug(m) => write!(f, "construction self-check failed: {m}"),
            Error::AlgorithmInvariant(m) => write!(f, "algorithm invariant violated: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn limit(what: &'static str, limit: u128, requested: u128) -> Error {
    Error::ResourceLimit {
        what,
        limit,
        requested,
    }
}
