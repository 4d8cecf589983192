use thiserror::Error;

use crate::graph::{SideTag, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("{side} vertex {id} out of range (side has {count} vertices)")]
    VertexOutOfRange { side: SideTag, id: VertexId, count: usize },
    #[error("too many vertices for 32-bit ids")]
    TooManyVertices,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: expected at least two tokens")]
    MalformedLine { line: usize },
    #[error("line {line}: input is not valid UTF-8")]
    InvalidUtf8 { line: usize },
    #[error("input contains no edges")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("mean bidegeneracy is undefined for the empty {0} side")]
    EmptySide(SideTag),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CapacityError {
    #[error("brute force supports at most {limit} vertices on the enumerated side, got {actual}")]
    BruteForce { limit: usize, actual: usize },
    #[error("clique-extended enumeration supports at most {limit} vertices in total, got {actual}")]
    CliqueExtended { limit: usize, actual: usize },
}
