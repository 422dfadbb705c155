use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0} is not a quasi-descent of the forest {1}")]
    NotQdes(u32, String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation {0} is not noncrossing")]
    NotNoncrossing(String),

    #[error("word {0:?} is not a reduced word of {1}")]
    NotReduced(Vec<u32>, String),

    #[error("word {0:?} is not a noncrossing reduced word of {1}")]
    NotNcReduced(Vec<u32>, String),

    #[error("size {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("forest {0} is not supported on [{1}]")]
    Support(String, usize),

    #[error("polynomial contains x variables: {0}")]
    HasX(String),

    #[error("polynomial uses x{0} beyond the declared bound {1}")]
    XIndexTooLarge(u32, u32),

    #[error("more than one selected box in column {0}")]
    ColumnMultiplicity(u32),

    #[error("invalid subword: {0}")]
    InvalidSubword(String),

    #[error("expression is not star-compatible: {0}")]
    NotStarCompatible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
