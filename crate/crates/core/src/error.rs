use thiserror::Error;

/// Errors produced by graph construction, metric evaluation, search and codecs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no graph of order {n} and radius {r} has a center of size {s}")]
    InfeasibleTarget { n: usize, r: usize, s: usize },
    #[error("not an induced cycle: {0}")]
    NotInducedCycle(String),
    #[error("graph6 error at byte {offset}: {reason}")]
    Codec { offset: usize, reason: String },
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("corpus mixes orders {expected} and {found}")]
    MixedOrders { expected: usize, found: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
