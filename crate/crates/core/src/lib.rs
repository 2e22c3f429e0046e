//! Fully dynamic low out-degree edge orientation.
//!
//! An undirected graph receives a stream of edge insertions and deletions;
//! each strategy in [`algorithms`] keeps every edge oriented so that the
//! maximum out-degree stays small, which bounds the cost of adjacency
//! queries by that degree. [`exact`] computes the true optimum of a static
//! graph for comparison, [`io_ingest`] reads and normalizes inputs, and
//! [`bench`] drives and aggregates benchmark runs.

pub mod algorithms;
pub mod bench;
pub mod exact;
pub mod graph_core;
pub mod io_ingest;

pub use algorithms::{AlgorithmConfig, AlgorithmError, AlgorithmKind, DynamicOrientation};
pub use bench::BenchmarkRecord;
pub use exact::{ExactResult, StaticGraph};
pub use graph_core::{OrientedGraph, VertexId};
pub use io_ingest::{EditOp, EditSequence};

/// Profile breakpoint in `f64`.
pub type ProfilePoint = bench::stats::ProfilePoint<f64>;
/// Performance profiles keyed by algorithm label.
pub type Profile = std::collections::BTreeMap<String, Vec<ProfilePoint>>;
/// Value table in `f64`.
pub type ValueTable = bench::stats::ValueTable<f64>;
