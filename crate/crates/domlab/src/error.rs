use thiserror::Error;

/// Errors shared by all domlab modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("operation needs {needed} vertices but the cap is {cap}")]
    CapacityExceeded { needed: usize, cap: usize },
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex {vertex} is not a member of the given set")]
    VertexNotInSet { vertex: usize },
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph has {n} vertices but at least {min} are required")]
    TooSmall { n: usize, min: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is not sub-removable")]
    NotSrTree,
    #[error("operation requires domination number 1, got {gamma}")]
    PreconditionGammaNotOne { gamma: usize },
    #[error("invalid construction spec: {0}")]
    SpecInvalid(String),
    #[error("construction produced a disconnected graph")]
    DisconnectedResult,
    #[error("invalid size {n}: expected {min}..={max}")]
    InvalidSize { n: usize, min: usize, max: usize },
    #[error("unsupported family parameters: {0}")]
    UnknownFamily(String),
    #[error("malformed graph6 at byte {position}: {reason}")]
    MalformedGraph6 { position: usize, reason: String },
    #[error("malformed input at line {line}: {reason}")]
    MalformedInput { line: usize, reason: String },
    #[error("unknown theorem id: {0}")]
    UnknownTheoremId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
