use thiserror::Error;

/// Errors raised by filter design and graph filtering.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A design specification violates one of its constraints.
    #[error("invalid specification: {0}")]
    Spec(String),

    /// The specification is well-formed but needs an infinite order.
    #[error("degenerate specification: {0}")]
    Degenerate(String),

    /// A Jacobi elliptic function was evaluated at (or numerically on top of) a pole.
    #[error("pole of elliptic function at u = {re} + {im}j")]
    Pole { re: f64, im: f64 },

    /// Pole/zero multiset is not closed under conjugation.
    #[error("composition error: {0}")]
    Composition(String),

    /// Vector or matrix sizes do not agree.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A linear solve would be (numerically) singular.
    #[error("numerical stability error: {0}")]
    Stability(String),

    /// Malformed input text.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn spec(msg: impl Into<String>) -> Error {
    Error::Spec(msg.into())
}
