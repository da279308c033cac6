use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("malformed token {0:?}: expected `s<k>` or `a`")]
    MalformedToken(String),

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("affine generator in a word that must lie in the finite subgroup")]
    AffineLetter,

    #[error("invalid brick sequence: {0}")]
    InvalidBricks(String),

    #[error("pairs violate the pairwise inequalities: {0:?}")]
    InvalidBlock(Vec<(usize, usize)>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed canonical form: {0}")]
    MalformedCanonical(String),

    #[error("resource guard exceeded: more than {0} elements")]
    ResourceGuard(usize),

    #[error("certificate violation: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
