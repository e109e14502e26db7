//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An input violates a mathematical or physical constraint
    /// (invalid quantum numbers, out-of-range polynomial parameters, ...).
    #[error("invalid input: {0}")]
    Domain(String),

    /// A numerical procedure failed to reach its target accuracy.
    #[error("numeric failure in {what}: achieved error estimate {achieved:e}")]
    Numeric { what: String, achieved: f64 },

    /// An iterative kernel (eigenvalue iteration) did not converge.
    #[error("iteration failed to converge in {0}")]
    NoConvergence(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
