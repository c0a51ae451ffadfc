use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex} (pair ({vertex}, {vertex}))")]
    SelfLoop { vertex: usize },

    #[error("a graph needs at least one vertex")]
    NoVertices,

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("path endpoints must differ (got {0} twice)")]
    SameEndpoints(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("set is not convex: vertex {escaped} lies on an induced path between {u} and {v} but is outside the set")]
    NotConvex { u: usize, v: usize, escaped: usize },

    #[error("graph has {n} vertices, exceeding the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid gem witness: {0}")]
    InvalidWitness(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
