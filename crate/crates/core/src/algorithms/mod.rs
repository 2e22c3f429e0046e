//! Dynamic low out-degree orientation strategies behind one update
//! interface.
//!
//! Every strategy except K-Flips stores the orientation in an
//! [`OrientedGraph`] and deletes edges without re-optimizing. The path-search
//! strategies (BFS, random paths, descending degrees) share the pruning guard
//! in [`skip_by_guard`]: after the new edge is stored and the global maximum
//! updated, the update is skipped when the source is not a maximum-degree
//! vertex or the maximum is 1.

mod bfs;
mod brodal;
mod descdeg;
mod kflips;
mod naive;
mod rpath;

pub use bfs::BfsPathSearch;
pub use brodal::{reorientation_credit, AdaptiveBrodalFagerberg, BrodalFagerberg};
pub use descdeg::DescendingDegrees;
pub use kflips::{EdgeQueueStore, KFlips};
pub use naive::Naive;
pub use rpath::RandomPath;

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph_core::{GraphError, OrientedGraph, VertexId};
use crate::io_ingest::{EditKind, EditOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("reorientation budget exceeded: {flips} flips in one update (budget {budget})")]
    BudgetExceeded { flips: u64, budget: u64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Common update interface of all strategies.
pub trait DynamicOrientation: Send {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError>;

    fn delete(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError>;

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool;

    /// Current maximum out-degree.
    fn current_delta(&self) -> u32;

    fn out_degree(&self, v: VertexId) -> u32;

    fn vertex_count(&self) -> usize;

    fn edge_count(&self) -> usize;

    /// Total edge reorientations since construction.
    fn flips(&self) -> u64;

    /// Current orientation as arcs `(source, target)`.
    fn arcs(&self) -> Vec<(VertexId, VertexId)>;

    /// Full structural consistency scan.
    fn check_invariants(&self) -> Result<(), String>;

    fn apply(&mut self, op: &EditOp) -> Result<(), AlgorithmError> {
        match op.kind {
            EditKind::Insert => self.insert(op.u, op.v),
            EditKind::Delete => self.delete(op.u, op.v),
        }
    }
}

/// Implements the graph-backed parts of [`DynamicOrientation`] by delegating
/// to a `graph: OrientedGraph` field.
macro_rules! delegate_to_graph {
    () => {
        fn delete(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
            self.graph.delete_edge(u, v)?;
            Ok(())
        }

        fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
            self.graph.adjacent(u, v)
        }

        fn current_delta(&self) -> u32 {
            self.graph.current_delta()
        }

        fn out_degree(&self, v: VertexId) -> u32 {
            self.graph.out_degree(v)
        }

        fn vertex_count(&self) -> usize {
            self.graph.n()
        }

        fn edge_count(&self) -> usize {
            self.graph.m()
        }

        fn flips(&self) -> u64 {
            self.graph.flips()
        }

        fn arcs(&self) -> Vec<(VertexId, VertexId)> {
            self.graph.arcs().collect()
        }

        fn check_invariants(&self) -> Result<(), String> {
            self.graph.check_invariants()
        }
    };
}
pub(crate) use delegate_to_graph;

/// True when the insertion that just raised `u`'s out-degree needs no
/// further work: `u` is below the (already updated) maximum, or the maximum
/// is 1 and therefore optimal for a nonempty graph.
#[inline]
pub fn skip_by_guard(graph: &OrientedGraph, u: VertexId) -> bool {
    let delta = graph.current_delta();
    graph.out_degree(u) < delta || delta == 1
}

/// Epoch-stamped vertex marks; clearing all marks is `O(1)`.
#[derive(Debug, Clone)]
pub(crate) struct Marks {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Marks {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 1,
        }
    }

    pub(crate) fn clear(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
    }

    #[inline]
    pub(crate) fn mark(&mut self, v: VertexId) {
        self.stamp[v as usize] = self.epoch;
    }

    #[inline]
    pub(crate) fn is_marked(&self, v: VertexId) -> bool {
        self.stamp[v as usize] == self.epoch
    }
}

/// Strategy selector with the parameters that strategy uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgorithmKind {
    Naive,
    /// Breadth-first improving-path search limited to `depth`.
    Bfs {
        depth: u32,
    },
    /// Up to `repetitions` random walks of at most `depth` steps.
    RandomPath {
        depth: u32,
        repetitions: u32,
    },
    DescendingDegrees,
    /// `k` max-degree FIFO flips after every update.
    KFlips {
        k: u32,
    },
    /// Static bound on the arboricity.
    BrodalFagerberg {
        alpha_bound: u32,
    },
    /// Starts at bound 1 and scales it by `beta` on every rebuild.
    AdaptiveBrodalFagerberg {
        beta: Ratio<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmConfig {
    pub kind: AlgorithmKind,
    /// Seed for randomized strategies; ignored by deterministic ones.
    pub seed: u64,
}

impl AlgorithmConfig {
    pub fn new(kind: AlgorithmKind) -> Self {
        Self { kind, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<(), AlgorithmError> {
        let bad = |msg: &str| Err(AlgorithmError::InvalidConfig(msg.to_owned()));
        match self.kind {
            AlgorithmKind::Bfs { depth: 0 } => bad("depth must be >= 1"),
            AlgorithmKind::RandomPath { depth, repetitions } if depth == 0 || repetitions == 0 => {
                bad("depth and repetitions must be >= 1")
            }
            AlgorithmKind::KFlips { k: 0 } => bad("k must be >= 1"),
            AlgorithmKind::BrodalFagerberg { alpha_bound: 0 } => bad("alpha bound must be >= 1"),
            AlgorithmKind::AdaptiveBrodalFagerberg { beta }
                if beta <= Ratio::from_integer(1) || beta > Ratio::from_integer(2) =>
            {
                bad("beta must satisfy 1 < beta <= 2")
            }
            _ => Ok(()),
        }
    }

    /// Short identifier used in result files, e.g. `bfs_d20`.
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Builds a fresh instance on `n` vertices.
    pub fn build(&self, n: usize) -> Result<Box<dyn DynamicOrientation>, AlgorithmError> {
        self.validate()?;
        Ok(match self.kind {
            AlgorithmKind::Naive => Box::new(Naive::new(n)),
            AlgorithmKind::Bfs { depth } => Box::new(BfsPathSearch::new(n, depth)),
            AlgorithmKind::RandomPath { depth, repetitions } => {
                Box::new(RandomPath::new(n, depth, repetitions, self.seed))
            }
            AlgorithmKind::DescendingDegrees => Box::new(DescendingDegrees::new(n)),
            AlgorithmKind::KFlips { k } => Box::new(KFlips::new(n, k)),
            AlgorithmKind::BrodalFagerberg { alpha_bound } => {
                Box::new(BrodalFagerberg::new(n, alpha_bound))
            }
            AlgorithmKind::AdaptiveBrodalFagerberg { beta } => {
                Box::new(AdaptiveBrodalFagerberg::new(n, beta))
            }
        })
    }

    /// Whether the strategy consumes randomness.
    pub fn is_randomized(&self) -> bool {
        matches!(self.kind, AlgorithmKind::RandomPath { .. })
    }
}

impl fmt::Display for AlgorithmConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AlgorithmKind::Naive => write!(f, "naive"),
            AlgorithmKind::Bfs { depth } => write!(f, "bfs_d{depth}"),
            AlgorithmKind::RandomPath { depth, repetitions } => {
                write!(f, "rpath_d{depth}_r{repetitions}")
            }
            AlgorithmKind::DescendingDegrees => write!(f, "descdeg"),
            AlgorithmKind::KFlips { k } => write!(f, "kflips_k{k}"),
            AlgorithmKind::BrodalFagerberg { alpha_bound } => write!(f, "bf_a{alpha_bound}"),
            AlgorithmKind::AdaptiveBrodalFagerberg { beta } => {
                write!(f, "bf-adaptive_b{}", format_ratio(beta))
            }
        }
    }
}

/// Renders a ratio as a terminating decimal when possible, else `p/q`.
pub fn format_ratio(r: &Ratio<u64>) -> String {
    let (num, den) = (*r.numer() as u128, *r.denom() as u128);
    let Some(scale) = (0..=18u32).find(|&s| 10u128.pow(s) % den == 0) else {
        return format!("{num}/{den}");
    };
    let pow = 10u128.pow(scale);
    let scaled = num * (pow / den);
    let (int, frac) = (scaled / pow, scaled % pow);
    if frac == 0 {
        return int.to_string();
    }
    let digits = format!("{frac:0width$}", width = scale as usize);
    format!("{int}.{}", digits.trim_end_matches('0'))
}

/// Parses a non-negative decimal such as `1.01` or a fraction such as `3/2`
/// into an exact ratio.
pub fn parse_ratio(s: &str) -> Option<Ratio<u64>> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let q: u64 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        return Some(Ratio::new(p.trim().parse().ok()?, q));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 18 {
        return None;
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().ok()?
    };
    Some(Ratio::new(int.checked_mul(den)?.checked_add(frac)?, den))
}
