use super::{delegate_to_graph, skip_by_guard, AlgorithmError, DynamicOrientation};
use crate::graph_core::{OrientedGraph, VertexId};

/// Descending degrees: push the surplus out-edge of `u` towards its
/// lowest-degree out-neighbor, recursively, while that strictly improves.
#[derive(Debug, Clone)]
pub struct DescendingDegrees {
    graph: OrientedGraph,
}

impl DescendingDegrees {
    pub fn new(n: usize) -> Self {
        Self {
            graph: OrientedGraph::new(n),
        }
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    /// Slot of the minimum-degree out-neighbor of `x` (ties: smallest id).
    fn min_neighbor(&self, x: VertexId) -> Option<(usize, VertexId, u32)> {
        self.graph
            .out_neighbors(x)
            .iter()
            .enumerate()
            .map(|(slot, &w)| (slot, w, self.graph.out_degree(w)))
            .min_by_key(|&(_, w, d)| (d, w))
    }

    /// One descent from `start`. Returns whether the first swap happened.
    fn descend(&mut self, start: VertexId) -> bool {
        let mut x = start;
        let mut swapped_any = false;
        while let Some((slot, w, dw)) = self.min_neighbor(x) {
            if dw + 1 >= self.graph.out_degree(x) {
                break;
            }
            self.graph.flip_slot(x, slot);
            swapped_any = true;
            x = w;
        }
        swapped_any
    }
}

impl DynamicOrientation for DescendingDegrees {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.graph.insert_oriented(u, v)?;
        if skip_by_guard(&self.graph, u) {
            return Ok(());
        }
        while self.descend(u) {}
        Ok(())
    }

    delegate_to_graph!();
}
