use thiserror::Error;

use crate::graph::{GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("this operation requires a directed graph")]
    UndirectedInput,
    #[error("this operation requires an undirected graph")]
    DirectedInput,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(VertexId),
    #[error("k must be at least {min}, got {k}")]
    KTooSmall { k: usize, min: usize },
    #[error("k = {k} exceeds the configured maximum {max}")]
    KTooLarge { k: usize, max: usize },
    #[error("graph has {n} vertices, above the oracle limit {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("arc {0} is not a tree arc")]
    EdgeNotInTree(usize),
    #[error("arcs are not independent in the tree")]
    NotIndependent,
    #[error("shortest path tree does not match the graph: {0}")]
    InconsistentTree(String),
    #[error("invalid path table: {0}")]
    InvalidTable(String),
    #[error("source and target are both vertex {0}")]
    SameEndpoints(VertexId),
    #[error("solution does not decode: {0}")]
    Decode(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_vertex(n: usize, v: VertexId) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange(v))
    }
}
