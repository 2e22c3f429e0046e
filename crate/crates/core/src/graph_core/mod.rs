//! Shared mutable state for all orientation algorithms: the oriented
//! adjacency store, out-degree bookkeeping, path flipping and the
//! max-degree bucket tracker.

mod oriented;
mod tracker;

pub use oriented::{DirectedPath, OrientedGraph};
pub use tracker::MaxDegreeTracker;

use thiserror::Error;

/// Vertex index in `[0, n)`.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {{{0}, {1}}} already present")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("stale path: hop {0} no longer matches the stored orientation")]
    StalePath(usize),
}
