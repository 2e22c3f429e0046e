use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{delegate_to_graph, skip_by_guard, AlgorithmError, DynamicOrientation, Marks};
use crate::graph_core::{DirectedPath, OrientedGraph, VertexId};

/// Improving-path search by random walks.
///
/// Each walk starts at `u`, repeatedly steps along a uniformly chosen
/// out-edge to an unmarked vertex, and stops with success at the first vertex
/// of out-degree below `deg(u) - 1`, or with failure after `depth` steps or at
/// a dead end. At most `repetitions` walks are tried; marks are cleared
/// between walks.
#[derive(Debug, Clone)]
pub struct RandomPath {
    graph: OrientedGraph,
    depth: u32,
    repetitions: u32,
    rng: ChaCha8Rng,
    marks: Marks,
    path: DirectedPath,
    scratch: Vec<u32>,
    reset_between_walks: bool,
}

impl RandomPath {
    pub fn new(n: usize, depth: u32, repetitions: u32, seed: u64) -> Self {
        Self::with_graph(OrientedGraph::new(n), depth, repetitions, seed)
    }

    pub(crate) fn with_graph(
        graph: OrientedGraph,
        depth: u32,
        repetitions: u32,
        seed: u64,
    ) -> Self {
        let n = graph.n();
        Self {
            graph,
            depth,
            repetitions,
            rng: ChaCha8Rng::seed_from_u64(seed),
            marks: Marks::new(n),
            path: DirectedPath::default(),
            scratch: Vec::new(),
            reset_between_walks: true,
        }
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    /// Runs up to `repetitions` walks from `u` and flips the first
    /// successful one. Returns whether a path was flipped.
    pub(crate) fn improve_from(&mut self, u: VertexId) -> Result<bool, AlgorithmError> {
        let threshold = self.graph.out_degree(u).saturating_sub(1);
        self.marks.clear();
        for _ in 0..self.repetitions {
            if self.reset_between_walks {
                self.marks.clear();
            }
            if self.walk(u, threshold) {
                self.graph.flip_path(&self.path)?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn walk(&mut self, u: VertexId, threshold: u32) -> bool {
        self.marks.mark(u);
        self.path.reset(u);
        let mut y = u;
        for _ in 0..self.depth {
            let Some(slot) = self.pick_unmarked(y) else {
                return false;
            };
            let next = self.graph.out_neighbors(y)[slot];
            self.marks.mark(next);
            self.path.push(next, slot as u32);
            if self.graph.out_degree(next) < threshold {
                return true;
            }
            y = next;
        }
        false
    }

    /// Uniform choice among unmarked out-neighbors of `y`: one blind draw,
    /// and only if it hits a marked vertex a draw over the unmarked subset.
    fn pick_unmarked(&mut self, y: VertexId) -> Option<usize> {
        let out = self.graph.out_neighbors(y);
        if out.is_empty() {
            return None;
        }
        let first = self.rng.gen_range(0..out.len());
        if !self.marks.is_marked(out[first]) {
            return Some(first);
        }
        self.scratch.clear();
        self.scratch.extend(
            out.iter()
                .enumerate()
                .filter(|(_, &x)| !self.marks.is_marked(x))
                .map(|(i, _)| i as u32),
        );
        if self.scratch.is_empty() {
            return None;
        }
        let pick = self.rng.gen_range(0..self.scratch.len());
        Some(self.scratch[pick] as usize)
    }
}

impl DynamicOrientation for RandomPath {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.graph.insert_oriented(u, v)?;
        if skip_by_guard(&self.graph, u) {
            return Ok(());
        }
        self.improve_from(u)?;
        Ok(())
    }

    delegate_to_graph!();
}
