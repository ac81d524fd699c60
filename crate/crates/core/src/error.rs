use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular system")]
    Singular,
    #[error("inconsistent overdetermined system")]
    Inconsistent,
    #[error("pole: {0}")]
    Pole(String),
    #[error("degenerate parameter point: {0}")]
    DegenerateParameterPoint(String),
    #[error("unsupported evaluation point: {0}")]
    UnsupportedEvaluationPoint(String),
    #[error("unsupported parameter region: {0}")]
    UnsupportedParameterRegion(String),
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("degree overflow: operator leaves the degree <= {0} space")]
    DegreeOverflow(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
