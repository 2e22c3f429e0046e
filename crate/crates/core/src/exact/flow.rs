use super::{ExactResult, StaticGraph};
use crate::graph_core::VertexId;

const SOURCE: usize = 0;
const SINK: usize = 1;
const UNREACHED: u32 = u32::MAX;

/// Orientation feasibility network: source -> one node per edge (cap 1) ->
/// both endpoint nodes (cap 1) -> sink (cap `c`). A `c`-orientation exists
/// iff the maximum flow saturates every edge node. Arcs are stored in pairs
/// (`a`, `a ^ 1`) in CSR form.
struct OrientationNetwork {
    first: Vec<u32>,
    to: Vec<u32>,
    cap: Vec<u32>,
    order: Vec<u32>,
    level: Vec<u32>,
    next_arc: Vec<u32>,
    queue: Vec<u32>,
    path: Vec<u32>,
}

impl OrientationNetwork {
    fn new(g: &StaticGraph) -> Self {
        let m = g.m();
        let nodes = 2 + m + g.n();
        let vertex_node = |v: VertexId| 2 + m + v as usize;
        let mut to = Vec::with_capacity(2 * (3 * m + g.n()));
        let mut from = Vec::with_capacity(to.capacity());
        let mut add = |a: usize, b: usize| {
            from.push(a as u32);
            to.push(b as u32);
            from.push(b as u32);
            to.push(a as u32);
        };
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            add(SOURCE, 2 + i);
            add(2 + i, vertex_node(u));
            add(2 + i, vertex_node(v));
        }
        for v in 0..g.n() {
            add(vertex_node(v as VertexId), SINK);
        }
        // CSR index over arc ids grouped by tail node
        let mut first = vec![0u32; nodes + 1];
        for &a in &from {
            first[a as usize + 1] += 1;
        }
        for i in 0..nodes {
            first[i + 1] += first[i];
        }
        let mut fill = first.clone();
        let mut order = vec![0u32; from.len()];
        for (arc, &a) in from.iter().enumerate() {
            order[fill[a as usize] as usize] = arc as u32;
            fill[a as usize] += 1;
        }
        Self {
            first,
            cap: vec![0; to.len()],
            to,
            order,
            level: vec![UNREACHED; nodes],
            next_arc: vec![0; nodes],
            queue: Vec::with_capacity(nodes),
            path: Vec::new(),
        }
    }

    fn reset(&mut self, c: u32) {
        for (arc, cap) in self.cap.iter_mut().enumerate() {
            let forward = arc % 2 == 0;
            let into_sink = self.to[arc] as usize == SINK;
            *cap = match (forward, into_sink) {
                (false, _) => 0,
                (true, true) => c,
                (true, false) => 1,
            };
        }
    }

    fn build_levels(&mut self) -> bool {
        self.level.fill(UNREACHED);
        self.queue.clear();
        self.level[SOURCE] = 0;
        self.queue.push(SOURCE as u32);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head] as usize;
            head += 1;
            for i in self.first[v]..self.first[v + 1] {
                let arc = self.order[i as usize] as usize;
                let w = self.to[arc] as usize;
                if self.cap[arc] > 0 && self.level[w] == UNREACHED {
                    self.level[w] = self.level[v] + 1;
                    self.queue.push(w as u32);
                }
            }
        }
        self.level[SINK] != UNREACHED
    }

    /// Pushes one unit along a level-increasing path; every source arc has
    /// capacity 1 so each augmenting path carries exactly one unit.
    fn augment_one(&mut self) -> bool {
        self.path.clear();
        let mut v = SOURCE;
        loop {
            if v == SINK {
                for &arc in &self.path {
                    self.cap[arc as usize] -= 1;
                    self.cap[arc as usize ^ 1] += 1;
                }
                return true;
            }
            let mut advanced = false;
            let end = self.first[v + 1];
            while self.first[v] + self.next_arc[v] < end {
                let arc = self.order[(self.first[v] + self.next_arc[v]) as usize] as usize;
                let w = self.to[arc] as usize;
                if self.cap[arc] > 0 && self.level[w] == self.level[v] + 1 {
                    self.path.push(arc as u32);
                    v = w;
                    advanced = true;
                    break;
                }
                self.next_arc[v] += 1;
            }
            if advanced {
                continue;
            }
            if v == SOURCE {
                return false;
            }
            self.level[v] = UNREACHED;
            let arc =
                self.path
                    .pop()
                    .expect("non-source vertex has an incoming path arc") as usize;
            v = self.to[arc ^ 1] as usize;
            self.next_arc[v] += 1;
        }
    }

    fn max_flow(&mut self, c: u32) -> usize {
        self.reset(c);
        let mut flow = 0;
        while self.build_levels() {
            self.next_arc.fill(0);
            while self.augment_one() {
                flow += 1;
            }
        }
        flow
    }

    fn witness(&self, g: &StaticGraph) -> Vec<(VertexId, VertexId)> {
        g.edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                // arcs of edge node i: [src->e, e->u, e->v] pairs, see new()
                let to_u = 6 * i + 2;
                if self.cap[to_u] == 0 {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect()
    }
}

/// Some `c`-orientation of `g`, if one exists.
pub fn feasible_delta(g: &StaticGraph, c: u32) -> Option<Vec<(VertexId, VertexId)>> {
    let mut net = OrientationNetwork::new(g);
    (net.max_flow(c) == g.m()).then(|| net.witness(g))
}

/// Smallest `phi` with a `phi`-orientation, searched over
/// `[ceil(m / n), max degree]`; any orientation stays within the maximum
/// degree, so the upper end is always feasible.
pub fn exact_optimum(g: &StaticGraph) -> ExactResult {
    if g.m() == 0 {
        return ExactResult {
            phi: 0,
            witness: Vec::new(),
        };
    }
    let mut net = OrientationNetwork::new(g);
    let (mut lo, mut hi) = (g.density_bound(), g.max_degree());
    let mut best = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if net.max_flow(mid) == g.m() {
            best = Some((mid, net.witness(g)));
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    match best {
        Some((phi, witness)) if phi == lo => ExactResult { phi, witness },
        _ => {
            let flow = net.max_flow(lo);
            debug_assert_eq!(flow, g.m());
            ExactResult {
                phi: lo,
                witness: net.witness(g),
            }
        }
    }
}
