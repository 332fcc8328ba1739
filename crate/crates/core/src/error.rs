use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} repeated within a triple")]
    RepeatedVertex(usize),
    #[error("codegree needs two distinct vertices, got {0} twice")]
    SamePair(usize),
    #[error("{what} supports at most {cap} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("vertex counts differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("pattern has no edges")]
    EmptyPattern,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("triple {0:?} is not an edge")]
    NotAnEdge([usize; 3]),
    #[error("inadmissible pair set: {0}")]
    Inadmissible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
