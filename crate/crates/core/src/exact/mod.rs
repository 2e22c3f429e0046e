//! Exact minimum maximum-out-degree orientation of a static graph.
//!
//! [`exact_optimum`] binary-searches the smallest `c` for which a flow
//! network certifies a `c`-orientation; [`brute_force_optimum`] enumerates
//! all orientations of small graphs and serves as an independent check.

mod brute;
mod flow;

pub use brute::{brute_force_optimum, BRUTE_FORCE_MAX_EDGES};
pub use flow::{exact_optimum, feasible_delta};

use std::collections::HashSet;

use thiserror::Error;

use crate::graph_core::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("{edges} edges exceed the enumeration bound of {max}")]
    TooLarge { edges: usize, max: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

/// Undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StaticGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl StaticGraph {
    /// Rejects self-loops, out-of-range endpoints and repeated pairs.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, ExactError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u == v {
                return Err(ExactError::InvalidGraph(format!("self-loop at {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(ExactError::InvalidGraph(format!(
                    "edge {{{u}, {v}}} out of range for n = {n}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ExactError::InvalidGraph(format!(
                    "edge {{{u}, {v}}} repeated"
                )));
            }
        }
        Ok(Self { n, edges })
    }

    /// Builds a simple graph from arbitrary pairs, dropping self-loops and
    /// repeats. Edges come out as `(min, max)`, sorted.
    pub fn from_pairs_lossy<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let set: HashSet<(VertexId, VertexId)> = pairs
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let mut edges: Vec<_> = set.into_iter().collect();
        edges.sort_unstable();
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    /// Maximum undirected degree.
    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `ceil(m / n)`, a lower bound on any orientation's maximum out-degree.
    pub fn density_bound(&self) -> u32 {
        if self.edges.is_empty() || self.n == 0 {
            0
        } else {
            self.edges.len().div_ceil(self.n) as u32
        }
    }
}

/// Minimum maximum out-degree with an orientation attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub phi: u32,
    /// One arc `(source, target)` per input edge.
    pub witness: Vec<(VertexId, VertexId)>,
}

/// Checks that `arcs` orients every edge of `g` exactly once and returns
/// the resulting maximum out-degree.
pub fn validate_orientation(g: &StaticGraph, arcs: &[(VertexId, VertexId)]) -> Result<u32, String> {
    if arcs.len() != g.m() {
        return Err(format!("{} arcs for {} edges", arcs.len(), g.m()));
    }
    let mut remaining: HashSet<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut out = vec![0u32; g.n()];
    for &(u, v) in arcs {
        if !remaining.remove(&(u.min(v), u.max(v))) {
            return Err(format!("arc ({u}, {v}) is not an edge or is repeated"));
        }
        out[u as usize] += 1;
    }
    Ok(out.into_iter().max().unwrap_or(0))
}
