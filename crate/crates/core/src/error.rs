use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix has odd diagonal entry at index {0}")]
    OddDiagonal(usize),
    #[error("degenerate gram matrix")]
    Degenerate,
    #[error("zero vector")]
    ZeroVector,
    #[error("vector is not integral")]
    NotIntegral,
    #[error("integer overflow")]
    Overflow,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("trivial Brauer class")]
    TrivialClass,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate not applicable: {0}")]
    Certificate(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("all forms vanish: indeterminacy point")]
    Indeterminate,
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn ensure_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension { expected, got })
    }
}
