//! Reading static graphs and edit sequences, removing obsolete updates, and
//! turning static graphs into seeded insertion streams.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64`, which produces the same
//! stream on every platform; shuffles use `rand`'s Fisher–Yates
//! `SliceRandom::shuffle`.

mod edits;
mod generate;
mod metis;
mod normalize;

pub use edits::{parse_edits, parse_edits_str, write_edits};
pub use generate::{gen_random_graph, static_to_stream};
pub use metis::{parse_metis, parse_metis_str, write_metis};
pub use normalize::{final_graph, normalize, NormalizationReport};

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::graph_core::VertexId;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: negative vertex id")]
    NegativeVertex { line: usize },
    #[error("cannot place {m} edges on {n} vertices")]
    TooDense { n: usize, m: u64 },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl IngestError {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Self::Parse {
            line,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditKind {
    Insert,
    Delete,
}

/// A single edge update on the undirected pair `{u, v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EditOp {
    pub kind: EditKind,
    pub u: VertexId,
    pub v: VertexId,
}

impl EditOp {
    pub fn insert(u: VertexId, v: VertexId) -> Self {
        Self {
            kind: EditKind::Insert,
            u,
            v,
        }
    }

    pub fn delete(u: VertexId, v: VertexId) -> Self {
        Self {
            kind: EditKind::Delete,
            u,
            v,
        }
    }

    /// The undirected pair as `(min, max)`.
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

impl fmt::Display for EditOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.kind {
            EditKind::Insert => '+',
            EditKind::Delete => '-',
        };
        write!(f, "{sign} {} {}", self.u, self.v)
    }
}

/// Ordered stream of updates on a fixed vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EditSequence {
    pub n: usize,
    pub ops: Vec<EditOp>,
    /// Where the sequence came from, e.g. a file name and seed.
    pub provenance: String,
}

impl EditSequence {
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

pub(crate) fn read_file(path: &std::path::Path) -> Result<String, IngestError> {
    std::fs::read_to_string(path).map_err(|source| IngestError::Io {
        path: path.to_owned(),
        source,
    })
}
