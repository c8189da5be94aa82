use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Failure while reading one of the text formats. `offset` is the byte offset
/// of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("a linear forest needs at least one path")]
    NoParts,
    #[error("path order {0} is below 2")]
    PartTooSmall(usize),
    #[error("invalid forest spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring of K_{n} needs {expected} edge colors, got {got}")]
    WrongEdgeCount { n: usize, expected: usize, got: usize },
    #[error("edge ({u}, {v}) is not a pair of distinct vertices below {n}")]
    BadEdge { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) colored twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has no color")]
    MissingEdge { u: usize, v: usize },
    #[error("color ids are not dense: header says {declared} colors, found {found}")]
    NotDense { declared: usize, found: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("input outside the range where the formula is established: {0}")]
    OutOfValidity(String),
    #[error("case not covered by this formula: {0}")]
    Unsupported(String),
    #[error("arithmetic overflow")]
    Overflow,
}
