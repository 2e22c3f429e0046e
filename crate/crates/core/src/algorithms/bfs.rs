use super::{delegate_to_graph, skip_by_guard, AlgorithmError, DynamicOrientation, Marks};
use crate::graph_core::{DirectedPath, OrientedGraph, VertexId};

#[derive(Debug, Clone, Copy)]
struct Visit {
    vertex: VertexId,
    parent: u32,
    slot: u32,
    depth: u32,
}

/// Improving-path search by breadth-first search.
///
/// After storing `u -> v` (and unless the pruning guard skips), searches the
/// oriented graph from `u` up to `depth` hops for the first vertex `y` in
/// discovery order with `deg(y) < deg(u) - 1`, and flips the `u`-`y` path.
#[derive(Debug, Clone)]
pub struct BfsPathSearch {
    graph: OrientedGraph,
    depth: u32,
    marks: Marks,
    frontier: Vec<Visit>,
    path: DirectedPath,
}

impl BfsPathSearch {
    pub fn new(n: usize, depth: u32) -> Self {
        Self {
            graph: OrientedGraph::new(n),
            depth,
            marks: Marks::new(n),
            frontier: Vec::new(),
            path: DirectedPath::default(),
        }
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    /// Index into `frontier` of the first qualifying target, if any.
    fn search(&mut self, u: VertexId) -> Option<usize> {
        let threshold = self.graph.out_degree(u).saturating_sub(1);
        self.marks.clear();
        self.frontier.clear();
        self.marks.mark(u);
        self.frontier.push(Visit {
            vertex: u,
            parent: u32::MAX,
            slot: 0,
            depth: 0,
        });
        let mut head = 0;
        while head < self.frontier.len() {
            let Visit {
                vertex: x, depth, ..
            } = self.frontier[head];
            if depth < self.depth {
                for (slot, &y) in self.graph.out_neighbors(x).iter().enumerate() {
                    if self.marks.is_marked(y) {
                        continue;
                    }
                    self.marks.mark(y);
                    self.frontier.push(Visit {
                        vertex: y,
                        parent: head as u32,
                        slot: slot as u32,
                        depth: depth + 1,
                    });
                    if self.graph.out_degree(y) < threshold {
                        return Some(self.frontier.len() - 1);
                    }
                }
            }
            head += 1;
        }
        None
    }

    fn build_path(&mut self, target: usize) {
        let mut hops = Vec::new();
        let mut at = target;
        while self.frontier[at].parent != u32::MAX {
            hops.push(self.frontier[at]);
            at = self.frontier[at].parent as usize;
        }
        self.path.reset(self.frontier[at].vertex);
        for hop in hops.iter().rev() {
            self.path.push(hop.vertex, hop.slot);
        }
    }
}

impl DynamicOrientation for BfsPathSearch {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.graph.insert_oriented(u, v)?;
        if skip_by_guard(&self.graph, u) {
            return Ok(());
        }
        if let Some(target) = self.search(u) {
            self.build_path(target);
            self.graph.flip_path(&self.path)?;
        }
        Ok(())
    }

    delegate_to_graph!();
}
