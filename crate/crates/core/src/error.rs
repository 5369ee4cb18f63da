use thiserror::Error;

/// Errors across the geometry, distance, and index layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bisection exceeded {max_iter} iterations (bracket width {width}); tolerance unreachable")]
    ToleranceUnreachable { max_iter: u32, width: f64 },

    #[error("items at zero (or sub-tolerance) distance; deduplicate before indexing")]
    DuplicateItem,

    #[error("net tree invariant violated: {0}")]
    InvariantViolation(String),

    #[error("all edges have zero length; bundledness is undefined")]
    DegenerateEdges,

    #[error("need at least {needed} distinct curves, got {got}")]
    TooFewCurves { needed: usize, got: usize },

    #[error("serialization: {0}")]
    Serde(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
