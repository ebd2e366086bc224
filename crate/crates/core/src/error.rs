use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("simple reflection s_{index} out of range for degree {n}")]
    ReflectionOutOfRange { index: usize, n: usize },

    #[error("s_{i} and s_{j} are not adjacent generators")]
    NotAdjacent { i: usize, j: usize },

    #[error("degree {n} exceeds the limit {max}")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not column strict")]
    NotColumnStrict,

    #[error("tableau is not standard")]
    NotStandard,

    #[error("operation requires a straight (non-skew) shape")]
    SkewShape,

    #[error("shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),

    #[error("cell ({row}, {col}) is not an inner corner")]
    InvalidHole { row: usize, col: usize },

    #[error("{w} is not in D_{i}{j}")]
    NotInDomain { w: String, i: usize, j: usize },

    #[error("letter {letter} outside 1..={rank}")]
    LetterOutOfRange { letter: u32, rank: u32 },

    #[error("crystal index {i} outside 1..{rank}")]
    CrystalIndexOutOfRange { i: usize, rank: u32 },

    #[error("{r}^{n} words exceeds the limit {max}")]
    TooManyWords { n: usize, r: u32, max: usize },

    #[error("empty crystal word")]
    EmptyWord,

    #[error("recording tableau not constant on the component of {0}")]
    RecordingNotConstant(String),

    #[error("{path}:{line}: malformed cache record: {reason}")]
    CacheFormat {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
