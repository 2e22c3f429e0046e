use std::collections::HashSet;

use super::{GraphError, MaxDegreeTracker, VertexId};

/// A directed path `v0 -> v1 -> ... -> vk` through the current orientation,
/// together with the slot of `v(i+1)` inside the out-list of `vi` as seen
/// when the path was discovered.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DirectedPath {
    vertices: Vec<VertexId>,
    slots: Vec<u32>,
}

impl DirectedPath {
    pub fn new(start: VertexId) -> Self {
        Self {
            vertices: vec![start],
            slots: Vec::new(),
        }
    }

    /// Rebuilds the path in place, keeping the allocation.
    pub fn reset(&mut self, start: VertexId) {
        self.vertices.clear();
        self.slots.clear();
        self.vertices.push(start);
    }

    /// Appends the hop to `next`, found at `slot` of the current end's out-list.
    pub fn push(&mut self, next: VertexId, slot: u32) {
        self.vertices.push(next);
        self.slots.push(slot);
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn slots(&self) -> &[u32] {
        &self.slots
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("path has a start vertex")
    }
}

/// Orientation of an undirected simple graph on a fixed vertex set.
///
/// Each undirected edge `{u, v}` is stored exactly once, either as `v` in
/// `out[u]` or as `u` in `out[v]`. Out-lists are unordered arrays with
/// swap-remove deletion.
#[derive(Debug, Clone)]
pub struct OrientedGraph {
    out: Vec<Vec<VertexId>>,
    tracker: MaxDegreeTracker,
    m: usize,
    flips: u64,
}

impl OrientedGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= VertexId::MAX as usize, "vertex count exceeds id range");
        Self {
            out: vec![Vec::new(); n],
            tracker: MaxDegreeTracker::new(n),
            m: 0,
            flips: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    /// Number of stored undirected edges.
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn out_degree(&self, v: VertexId) -> u32 {
        self.out[v as usize].len() as u32
    }

    #[inline]
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v as usize]
    }

    /// Maximum out-degree over all vertices (0 on an edgeless graph).
    #[inline]
    pub fn current_delta(&self) -> u32 {
        self.tracker.max_degree()
    }

    /// Total number of single-edge reorientations performed so far.
    pub fn flips(&self) -> u64 {
        self.flips
    }

    pub fn tracker(&self) -> &MaxDegreeTracker {
        &self.tracker
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if (v as usize) < self.out.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.out.len(),
            })
        }
    }

    /// Stores the edge as `u -> v`.
    ///
    /// Duplicate detection costs `O(deg)` and only runs with debug assertions
    /// enabled; release builds trust the caller (ingestion removes duplicates).
    pub fn insert_oriented(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        #[cfg(debug_assertions)]
        if self.adjacent(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.out[u as usize].push(v);
        self.tracker.increment(u);
        self.m += 1;
        Ok(())
    }

    /// Removes `{u, v}` from whichever out-list holds it and returns the
    /// stored arc.
    pub fn delete_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
    ) -> Result<(VertexId, VertexId), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (src, dst) = if let Some(s) = self.find_slot(u, v) {
            self.out[u as usize].swap_remove(s);
            (u, v)
        } else if let Some(s) = self.find_slot(v, u) {
            self.out[v as usize].swap_remove(s);
            (v, u)
        } else {
            return Err(GraphError::MissingEdge(u, v));
        };
        self.tracker.decrement(src);
        self.m -= 1;
        Ok((src, dst))
    }

    /// Whether `{u, v}` is stored in either direction. Out-of-range ids are
    /// simply not adjacent.
    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        let n = self.out.len();
        if u as usize >= n || v as usize >= n {
            return false;
        }
        self.out[u as usize].contains(&v) || self.out[v as usize].contains(&u)
    }

    /// Position of `v` in `out[u]`, if stored there.
    #[inline]
    pub fn find_slot(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.out[u as usize].iter().position(|&x| x == v)
    }

    /// Reverses the arc stored at `slot` of `out[u]` and returns its former
    /// target.
    #[inline]
    pub fn flip_slot(&mut self, u: VertexId, slot: usize) -> VertexId {
        let v = self.out[u as usize].swap_remove(slot);
        self.out[v as usize].push(u);
        self.tracker.decrement(u);
        self.tracker.increment(v);
        self.flips += 1;
        v
    }

    /// Reverses the arc `u -> v`.
    pub fn flip_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let slot = self.find_slot(u, v).ok_or(GraphError::MissingEdge(u, v))?;
        self.flip_slot(u, slot);
        Ok(())
    }

    /// Reverses every edge of `path` in `O(|path|)` using its recorded slots.
    /// The start loses one out-edge, the end gains one, interior vertices are
    /// unchanged. Nothing is modified if any hop is stale.
    pub fn flip_path(&mut self, path: &DirectedPath) -> Result<(), GraphError> {
        let vs = path.vertices();
        for (i, &slot) in path.slots().iter().enumerate() {
            let src = vs[i];
            let ok = (src as usize) < self.out.len()
                && self.out[src as usize].get(slot as usize) == Some(&vs[i + 1]);
            if !ok {
                return Err(GraphError::StalePath(i));
            }
        }
        debug_assert!(
            vs.iter().collect::<HashSet<_>>().len() == vs.len(),
            "path vertices must be distinct"
        );
        // Each hop pushes onto the next vertex's list before that list is
        // swap-removed at its own recorded slot, so recorded slots stay valid.
        for (i, &slot) in path.slots().iter().enumerate() {
            let src = vs[i];
            let dst = vs[i + 1];
            self.out[src as usize].swap_remove(slot as usize);
            self.out[dst as usize].push(src);
        }
        if !path.is_empty() {
            self.tracker.decrement(path.start());
            self.tracker.increment(path.end());
        }
        self.flips += path.len() as u64;
        Ok(())
    }

    /// Reverses all out-edges of `w`, leaving it with out-degree zero.
    /// `visit(x, deg_x)` is called for every former target after it gained
    /// the edge back to `w`. Returns the number of flipped edges.
    pub fn reverse_out_edges<F>(&mut self, w: VertexId, mut visit: F) -> usize
    where
        F: FnMut(VertexId, u32),
    {
        let mut targets = std::mem::take(&mut self.out[w as usize]);
        let count = targets.len();
        for &x in &targets {
            self.out[x as usize].push(w);
            self.tracker.decrement(w);
            self.tracker.increment(x);
            visit(x, self.out[x as usize].len() as u32);
        }
        targets.clear();
        self.flips += count as u64;
        debug_assert!(self.out[w as usize].is_empty());
        self.out[w as usize] = targets;
        count
    }

    /// Drops all edges, keeping the vertex set and the flip counter.
    pub fn clear(&mut self) {
        for list in &mut self.out {
            list.clear();
        }
        self.tracker.reset();
        self.m = 0;
    }

    /// All stored arcs `(u, v)`, grouped by source in vertex order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u as VertexId, v)))
    }

    /// Full scan of every structural invariant.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut seen = HashSet::with_capacity(self.m);
        let mut total = 0usize;
        for (u, list) in self.out.iter().enumerate() {
            let u = u as VertexId;
            if self.tracker.degree(u) as usize != list.len() {
                return Err(format!(
                    "tracker degree of {u} is {}, list has {}",
                    self.tracker.degree(u),
                    list.len()
                ));
            }
            for &v in list {
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if (v as usize) >= self.out.len() {
                    return Err(format!("arc {u}->{v} out of range"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(format!("edge {{{u}, {v}}} stored twice"));
                }
            }
            total += list.len();
        }
        if total != self.m {
            return Err(format!("sum of out-degrees {total} != m {}", self.m));
        }
        self.tracker.validate()
    }
}
