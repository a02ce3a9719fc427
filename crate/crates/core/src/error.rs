use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid step {found:?} at step {position} (expected 'N' or 'E')")]
    InvalidStep { position: usize, found: char },

    #[error("path dips below the diagonal at step {position}")]
    BelowDiagonal { position: usize },

    #[error("unbalanced word: {north} north steps and {east} east steps")]
    Unbalanced { north: usize, east: usize },

    #[error("composition has size {actual}, expected {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("count-map entry ({0}, {1}) lies outside the index set")]
    OutsideIndexSet(usize, usize),

    #[error("path {word} is not in the domain of {map}")]
    NotInDomain { word: String, map: &'static str },

    #[error("value {value} outside the admissible range {min}..={max}")]
    OutOfRange { value: usize, min: usize, max: usize },

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("cannot parse operator {0:?}")]
    BadOperator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
