use std::collections::HashMap;

use super::{AlgorithmError, DynamicOrientation};
use crate::graph_core::{GraphError, MaxDegreeTracker, VertexId};

const NIL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Entry {
    target: VertexId,
    prev: u32,
    next: u32,
}

#[inline]
fn key(u: VertexId, v: VertexId) -> u64 {
    (u as u64) << 32 | v as u64
}

/// Per-vertex FIFO queues of out-edges with removal of any named edge.
///
/// Queues are intrusive doubly-linked lists over a shared slab; a handle map
/// keyed by the arc `(u, v)` locates the entry for arbitrary deletion. The
/// arc `(u, v)` always lives in the queue of `u`.
#[derive(Debug, Clone)]
pub struct EdgeQueueStore {
    entries: Vec<Entry>,
    free: Vec<u32>,
    head: Vec<u32>,
    tail: Vec<u32>,
    len: Vec<u32>,
    handles: HashMap<u64, u32>,
}

impl EdgeQueueStore {
    pub fn new(n: usize) -> Self {
        Self {
            entries: Vec::new(),
            free: Vec::new(),
            head: vec![NIL; n],
            tail: vec![NIL; n],
            len: vec![0; n],
            handles: HashMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.head.len()
    }

    /// Number of stored arcs.
    pub fn arc_count(&self) -> usize {
        self.handles.len()
    }

    pub fn len(&self, u: VertexId) -> u32 {
        self.len[u as usize]
    }

    pub fn contains_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.handles.contains_key(&key(u, v))
    }

    /// Appends `(u, v)` to the back of `Q_u`. The caller guarantees the arc is
    /// not stored yet.
    pub fn push_back(&mut self, u: VertexId, v: VertexId) {
        let entry = Entry {
            target: v,
            prev: self.tail[u as usize],
            next: NIL,
        };
        let idx = match self.free.pop() {
            Some(i) => {
                self.entries[i as usize] = entry;
                i
            }
            None => {
                self.entries.push(entry);
                (self.entries.len() - 1) as u32
            }
        };
        match self.tail[u as usize] {
            NIL => self.head[u as usize] = idx,
            t => self.entries[t as usize].next = idx,
        }
        self.tail[u as usize] = idx;
        self.len[u as usize] += 1;
        let prev = self.handles.insert(key(u, v), idx);
        debug_assert!(prev.is_none(), "arc ({u}, {v}) pushed twice");
    }

    /// Removes the arc `(u, v)` from `Q_u`; false if it is not stored.
    pub fn remove(&mut self, u: VertexId, v: VertexId) -> bool {
        let Some(idx) = self.handles.remove(&key(u, v)) else {
            return false;
        };
        self.unlink(u, idx);
        true
    }

    /// Pops the oldest arc of `Q_u` and returns its target.
    pub fn pop_front(&mut self, u: VertexId) -> Option<VertexId> {
        let idx = self.head[u as usize];
        if idx == NIL {
            return None;
        }
        let v = self.entries[idx as usize].target;
        self.handles.remove(&key(u, v));
        self.unlink(u, idx);
        Some(v)
    }

    fn unlink(&mut self, u: VertexId, idx: u32) {
        let Entry { prev, next, .. } = self.entries[idx as usize];
        match prev {
            NIL => self.head[u as usize] = next,
            p => self.entries[p as usize].next = next,
        }
        match next {
            NIL => self.tail[u as usize] = prev,
            nx => self.entries[nx as usize].prev = prev,
        }
        self.len[u as usize] -= 1;
        self.free.push(idx);
    }

    /// Targets of `Q_u` in FIFO order.
    pub fn iter(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let mut at = self.head[u as usize];
        std::iter::from_fn(move || {
            if at == NIL {
                return None;
            }
            let e = self.entries[at as usize];
            at = e.next;
            Some(e.target)
        })
    }
}

/// K-Flips: after every insertion or deletion, `k` times take a current
/// maximum out-degree vertex `x` and reverse the oldest arc in `Q_x`.
#[derive(Debug, Clone)]
pub struct KFlips {
    queues: EdgeQueueStore,
    tracker: MaxDegreeTracker,
    k: u32,
    flips: u64,
}

impl KFlips {
    pub fn new(n: usize, k: u32) -> Self {
        Self {
            queues: EdgeQueueStore::new(n),
            tracker: MaxDegreeTracker::new(n),
            k,
            flips: 0,
        }
    }

    pub fn queues(&self) -> &EdgeQueueStore {
        &self.queues
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        let n = self.queues.vertex_count();
        if (v as usize) < n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n })
        }
    }

    fn k_flips(&mut self) {
        for _ in 0..self.k {
            // Nothing to flip once every out-degree is zero.
            let Some(x) = self.tracker.top_vertex() else {
                return;
            };
            let y = self
                .queues
                .pop_front(x)
                .expect("max-degree vertex has a nonempty queue");
            self.queues.push_back(y, x);
            self.tracker.decrement(x);
            self.tracker.increment(y);
            self.flips += 1;
        }
    }
}

impl DynamicOrientation for KFlips {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u).into());
        }
        if self.adjacent(u, v) {
            return Err(GraphError::DuplicateEdge(u, v).into());
        }
        self.queues.push_back(u, v);
        self.tracker.increment(u);
        self.k_flips();
        Ok(())
    }

    fn delete(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.queues.remove(u, v) {
            self.tracker.decrement(u);
        } else if self.queues.remove(v, u) {
            self.tracker.decrement(v);
        } else {
            return Err(GraphError::MissingEdge(u, v).into());
        }
        self.k_flips();
        Ok(())
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.queues.contains_arc(u, v) || self.queues.contains_arc(v, u)
    }

    fn current_delta(&self) -> u32 {
        self.tracker.max_degree()
    }

    fn out_degree(&self, v: VertexId) -> u32 {
        self.queues.len(v)
    }

    fn vertex_count(&self) -> usize {
        self.queues.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.queues.arc_count()
    }

    fn flips(&self) -> u64 {
        self.flips
    }

    fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.vertex_count() as VertexId)
            .flat_map(|u| self.queues.iter(u).map(move |v| (u, v)))
            .collect()
    }

    fn check_invariants(&self) -> Result<(), String> {
        let mut total = 0usize;
        let mut seen = std::collections::HashSet::new();
        for u in 0..self.vertex_count() as VertexId {
            let listed: Vec<_> = self.queues.iter(u).collect();
            if listed.len() as u32 != self.queues.len(u)
                || self.queues.len(u) != self.tracker.degree(u)
            {
                return Err(format!(
                    "vertex {u}: queue walk {} / length {} / tracked degree {}",
                    listed.len(),
                    self.queues.len(u),
                    self.tracker.degree(u)
                ));
            }
            for v in listed {
                if v == u || !self.queues.contains_arc(u, v) || !seen.insert((u.min(v), u.max(v))) {
                    return Err(format!("bad or duplicate arc ({u}, {v})"));
                }
            }
            total += self.queues.len(u) as usize;
        }
        if total != self.queues.arc_count() {
            return Err(format!(
                "{total} queued arcs but {} handles",
                self.queues.arc_count()
            ));
        }
        self.tracker.validate()
    }
}
