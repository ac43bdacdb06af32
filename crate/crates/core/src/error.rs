use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("circulant offset {offset} outside 1..={max} for order {order}")]
    OffsetOutOfRange {
        offset: usize,
        max: usize,
        order: usize,
    },

    #[error("no {degree}-regular graph on {order} vertices: {reason}")]
    Regularity {
        order: usize,
        degree: usize,
        reason: &'static str,
    },

    #[error("invalid chord ({0}, {1}): {2}")]
    InvalidChord(usize, usize, &'static str),

    #[error("invalid pattern: {0}")]
    Pattern(String),

    #[error("parameter out of range: {0}")]
    Params(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("rbc parse error at line {line}: {msg}")]
    Rbc { line: usize, msg: String },

    #[error("order {order} exceeds the limit of {limit} for {what}")]
    OrderGuard {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("no bundled witness for {0}; supply a graph6 file or run the search")]
    UnknownWitness(String),

    #[error("witness precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
