use crate::ring::RingSpec;

/// Library-wide error type.
///
/// Hypothesis violations carry the text of the violated hypothesis so a
/// caller can tell *which* precondition of a generator construction failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("rank mismatch: l = {0} vs l = {1}")]
    RankMismatch(usize, usize),

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),

    #[error("hyperbolic rank must be at least 3, got {0}")]
    RankTooSmall(usize),

    #[error("invalid hyperbolic index {index} for rank {rank}")]
    BadIndex { index: i64, rank: usize },

    #[error("transvection indices must differ, got i = j = {0}")]
    EqualIndices(i64),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("{0} does not lie in the ideal I")]
    NotInIdeal(String),

    #[error("{0} does not lie in the form parameter \u{0393}")]
    NotInGamma(String),

    #[error("saturation of an explicit form parameter does not terminate over the integers")]
    InfiniteSaturation,

    #[error("matrix is not in the image of the unipotent radical at pivot {pivot}: {reason}")]
    NotUnipotent { pivot: i64, reason: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
