use thiserror::Error;

/// Failure classes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation (parity, size
    /// mismatch, non-integral multiplicity, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured enumeration or size bound would be exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// An internal consistency check failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
