use thiserror::Error;

/// Errors raised by the combinatorial and algebraic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid fixed point index {entries:?} for d = {d}: {reason}")]
    InvalidIndex {
        d: usize,
        entries: Vec<usize>,
        reason: &'static str,
    },

    #[error("dimension mismatch: d = {left} vs d = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0} is not isotropic")]
    NotIsotropic(String),

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("point {point} is not in the grid of {beta}")]
    PointOutsideGrid { point: String, beta: String },

    #[error("multiset is not special: {0}")]
    NotSpecial(String),

    #[error("expected alpha <= beta <= gamma, got {alpha} / {beta} / {gamma}")]
    InvalidTriple {
        alpha: String,
        beta: String,
        gamma: String,
    },

    #[error("zero polynomial has no initial term")]
    ZeroPolynomial,

    #[error("chain is empty")]
    EmptyChain,

    #[error("not an extended chain: {0}")]
    NotAChain(String),

    #[error("bitableau is not in the image of BRSK: {0}")]
    NotInImage(String),

    #[error("({top}, {bot}) is not an admissible pair")]
    NotAdmissible { top: String, bot: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
