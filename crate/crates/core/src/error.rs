use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch for operation {op}: expected {expected} arguments, found {found}")]
    ArityMismatch {
        op: usize,
        expected: usize,
        found: usize,
    },

    #[error("operation {0} has no binding")]
    UnboundOperation(usize),

    #[error("degree {degree} is incompatible with the operation arities")]
    IncompatibleDegree { degree: usize },

    #[error("not multilinear: {0}")]
    NotMultilinear(String),

    #[error("monomial {0} is not in the basis")]
    NotInBasis(String),

    #[error("{0} is not invertible in the field")]
    NotInvertible(String),

    #[error("field constraint: {0}")]
    FieldConstraint(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("no defining identity for operation {0} present")]
    MissingDefiningIdentity(usize),

    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
