#![allow(dead_code)]

use std::collections::HashMap;

use orient_core::io_ingest::EditSequence;
use orient_core::{EditOp, StaticGraph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Undirected edge set with O(1) insert, remove and uniform sampling.
#[derive(Debug, Default, Clone)]
pub struct ShadowSet {
    edges: Vec<(VertexId, VertexId)>,
    index: HashMap<(VertexId, VertexId), usize>,
}

pub fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

impl ShadowSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.index.contains_key(&key(u, v))
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId) -> bool {
        let k = key(u, v);
        if self.index.contains_key(&k) {
            return false;
        }
        self.index.insert(k, self.edges.len());
        self.edges.push(k);
        true
    }

    pub fn remove(&mut self, u: VertexId, v: VertexId) -> bool {
        let Some(i) = self.index.remove(&key(u, v)) else {
            return false;
        };
        self.edges.swap_remove(i);
        if let Some(&moved) = self.edges.get(i) {
            self.index.insert(moved, i);
        }
        true
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Option<(VertexId, VertexId)> {
        if self.edges.is_empty() {
            None
        } else {
            Some(self.edges[rng.gen_range(0..self.edges.len())])
        }
    }

    pub fn sorted(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

/// A valid random insert/delete stream on `n` vertices whose edge count
/// drifts towards `target_m`. Endpoint order of every update is random.
pub fn random_updates(n: usize, count: usize, target_m: usize, seed: u64) -> EditSequence {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut shadow = ShadowSet::default();
    let full = n * (n - 1) / 2;
    let mut ops = Vec::with_capacity(count);
    while ops.len() < count {
        let p_insert = if shadow.len() < target_m { 0.75 } else { 0.25 };
        if shadow.len() < full && (shadow.len() == 0 || rng.gen_bool(p_insert)) {
            let u = rng.gen_range(0..n) as VertexId;
            let v = rng.gen_range(0..n) as VertexId;
            if u != v && shadow.insert(u, v) {
                ops.push(EditOp::insert(u, v));
            }
        } else {
            let (a, b) = shadow.sample(&mut rng).expect("nonempty");
            shadow.remove(a, b);
            ops.push(if rng.gen_bool(0.5) {
                EditOp::delete(a, b)
            } else {
                EditOp::delete(b, a)
            });
        }
    }
    EditSequence {
        n,
        ops,
        provenance: format!("random_updates(n={n},seed={seed})"),
    }
}

/// Uniform random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<(VertexId, VertexId)> {
    let mut label: Vec<VertexId> = (0..n as VertexId).collect();
    label.shuffle(rng);
    (1..n)
        .map(|i| (label[rng.gen_range(0..i)], label[i]))
        .collect()
}

/// Union of two random spanning trees; arboricity at most 2.
pub fn two_forest_union(n: usize, rng: &mut impl Rng) -> StaticGraph {
    let mut pairs = random_tree(n, rng);
    pairs.extend(random_tree(n, rng));
    StaticGraph::from_pairs_lossy(n, pairs)
}

/// Inserts all edges in random order, deletes a random half and inserts
/// those again in another random order.
pub fn churn_stream(g: &StaticGraph, rng: &mut impl Rng) -> Vec<EditOp> {
    let mut edges = g.edges().to_vec();
    edges.shuffle(rng);
    let mut ops: Vec<EditOp> = edges.iter().map(|&(u, v)| EditOp::insert(u, v)).collect();
    let half = edges.len() / 2;
    edges.shuffle(rng);
    ops.extend(edges[..half].iter().map(|&(u, v)| EditOp::delete(v, u)));
    edges[..half].shuffle(rng);
    ops.extend(edges[..half].iter().map(|&(u, v)| EditOp::insert(u, v)));
    ops
}
