use std::collections::HashSet;
use std::fmt;

use super::{EditKind, EditSequence};
use crate::exact::StaticGraph;

/// Counts of updates kept and dropped by [`normalize`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NormalizationReport {
    pub inserts_kept: usize,
    pub deletes_kept: usize,
    pub self_loops: usize,
    pub duplicate_inserts: usize,
    pub obsolete_deletes: usize,
}

impl NormalizationReport {
    pub fn dropped(&self) -> usize {
        self.self_loops + self.duplicate_inserts + self.obsolete_deletes
    }

    /// `(key, value)` pairs in output order.
    pub fn entries(&self) -> [(&'static str, usize); 5] {
        [
            ("inserts_kept", self.inserts_kept),
            ("deletes_kept", self.deletes_kept),
            ("self_loops", self.self_loops),
            ("duplicate_inserts", self.duplicate_inserts),
            ("obsolete_deletes", self.obsolete_deletes),
        ]
    }
}

impl fmt::Display for NormalizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in self.entries() {
            writeln!(f, "{key}:{value}")?;
        }
        Ok(())
    }
}

/// Drops self-loops, insertions of present edges and deletions of absent
/// edges, tracking presence with a shadow set of undirected pairs.
pub fn normalize(seq: &EditSequence) -> (EditSequence, NormalizationReport) {
    let mut present = HashSet::new();
    let mut report = NormalizationReport::default();
    let mut ops = Vec::with_capacity(seq.ops.len());
    for op in &seq.ops {
        if op.u == op.v {
            report.self_loops += 1;
            continue;
        }
        match op.kind {
            EditKind::Insert if !present.insert(op.key()) => report.duplicate_inserts += 1,
            EditKind::Insert => {
                report.inserts_kept += 1;
                ops.push(*op);
            }
            EditKind::Delete if !present.remove(&op.key()) => report.obsolete_deletes += 1,
            EditKind::Delete => {
                report.deletes_kept += 1;
                ops.push(*op);
            }
        }
    }
    let provenance = if seq.provenance.is_empty() || seq.provenance.ends_with("+normalized") {
        seq.provenance.clone()
    } else {
        format!("{}+normalized", seq.provenance)
    };
    (
        EditSequence {
            n: seq.n,
            ops,
            provenance,
        },
        report,
    )
}

/// Edge set after replaying `seq`, skipping obsolete updates.
pub fn final_graph(seq: &EditSequence) -> StaticGraph {
    let mut present = HashSet::new();
    for op in &seq.ops {
        if op.u == op.v {
            continue;
        }
        match op.kind {
            EditKind::Insert => present.insert(op.key()),
            EditKind::Delete => present.remove(&op.key()),
        };
    }
    StaticGraph::from_pairs_lossy(seq.n, present)
}
