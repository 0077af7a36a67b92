use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} supports at most {cap} vertices, got {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
    #[error("invariant chain violated: {0}")]
    ChainViolation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_capacity(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Capacity { what, n, cap })
    } else {
        Ok(())
    }
}
