use thiserror::Error;

/// Errors raised by the exact-arithmetic and Hall algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HallError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An enumeration would exceed the configured budget.
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    /// An internal identity that must hold did not; indicates a bug.
    #[error("consistency error: {0}")]
    Consistency(String),
    /// Malformed textual input (partitions, labels, expressions, quiver files).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HallError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(HallError::Domain(msg.into()))
}
