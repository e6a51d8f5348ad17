use thiserror::Error;

/// Errors raised by morphism constructors and composition operations.
///
/// Every operation that has a shape or typing precondition returns
/// `Result<_, Error>`; values that pass construction are immutable and
/// never become invalid afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Matrix or grid dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Source/target objects of composed morphisms do not match.
    #[error("object mismatch: {0}")]
    Object(String),
    /// A two-sided inverse was required but does not exist.
    #[error("not invertible: {0}")]
    NotInvertible(String),
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
