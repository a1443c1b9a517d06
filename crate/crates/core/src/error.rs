use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("exponent or index too large at offset {offset}")]
    Overflow { offset: usize },

    #[error("ideal has no generators")]
    EmptyIdeal,

    #[error("ideal is not Artinian: x{variable} has no pure power among the generators")]
    NotArtinian { variable: usize },

    #[error("monomial has {found} exponents, expected {expected}")]
    VariableCount { expected: usize, found: usize },

    #[error("invalid almost complete intersection: {0}")]
    InvalidMaci(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series is not symmetric")]
    NotSymmetric,

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A structural hypothesis that should hold for symmetric almost complete
    /// intersections did not. Either a bug or a genuine counterexample.
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
