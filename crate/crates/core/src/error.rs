use embedcheck_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{name}' at column {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("line {line}: {msg}")]
    Catalog { line: usize, msg: String },
    #[error("count mismatch: {0}")]
    CountMismatch(String),
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("coefficient map does not kill relator {index}")]
    RelatorNotKilled { index: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown entry '{0}'")]
    UnknownEntry(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T, E = EmbedError> = std::result::Result<T, E>;
