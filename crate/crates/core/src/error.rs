use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge ({tail}, {head}) has length 0; lengths must be positive")]
    ZeroLength { tail: Vertex, head: Vertex },

    #[error("edge ({tail}, {head}) has length {len} above the declared bound {bound}")]
    LengthExceedsBound {
        tail: Vertex,
        head: Vertex,
        len: u64,
        bound: u64,
    },

    #[error("malformed graph file, line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("components are not a topological order of the strongly connected components: {0}")]
    InvalidClustering(String),

    #[error("shortcut edge ({0}, {1}) does not join a reachable pair")]
    UnreachableShortcut(Vertex, Vertex),

    #[error("oracle `{oracle}` returned {size} edges, above its size law a*m0+b = {bound}")]
    SizeLawViolation {
        oracle: String,
        size: usize,
        bound: String,
    },

    #[error("strict mode: {0}")]
    StrictMode(String),

    #[error(
        "verification needs all-pairs distances on {n} vertices, above the ceiling of {ceiling}"
    )]
    TooLarge { n: usize, ceiling: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
