use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{EditOp, EditSequence, IngestError};
use crate::exact::StaticGraph;
use crate::graph_core::VertexId;

/// All edges of `g` as insertions, in a uniformly random order fixed by
/// `seed`.
pub fn static_to_stream(g: &StaticGraph, seed: u64) -> EditSequence {
    let mut ops: Vec<EditOp> = g
        .edges()
        .iter()
        .map(|&(u, v)| EditOp::insert(u, v))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ops.shuffle(&mut rng);
    EditSequence {
        n: g.n(),
        ops,
        provenance: format!("static;seed={seed}"),
    }
}

/// Inverse of the pair ranking `k = j (j - 1) / 2 + i` with `i < j`.
fn unrank_pair(k: u64) -> (VertexId, VertexId) {
    let mut j = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    let i = k - j * (j - 1) / 2;
    (i as VertexId, j as VertexId)
}

/// Uniform simple graph with exactly `m` edges on `n` vertices, sampled
/// without replacement from all vertex pairs.
pub fn gen_random_graph(n: usize, m: u64, seed: u64) -> Result<StaticGraph, IngestError> {
    let pairs = (n as u64).saturating_mul((n as u64).saturating_sub(1)) / 2;
    if m > pairs || n > VertexId::MAX as usize {
        return Err(IngestError::TooDense { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(VertexId, VertexId)> =
        rand::seq::index::sample(&mut rng, pairs as usize, m as usize)
            .into_iter()
            .map(|k| unrank_pair(k as u64))
            .collect();
    edges.sort_unstable();
    Ok(StaticGraph::new(n, edges).expect("sampled pairs are distinct and in range"))
}
