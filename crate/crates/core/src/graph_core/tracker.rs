use super::VertexId;

/// Bucket priority queue over vertex out-degrees.
///
/// Every vertex lives in the bucket indexed by its current out-degree. Each
/// vertex remembers its slot inside that bucket so a degree change is a
/// constant-time swap-remove plus push. `max` always points at the highest
/// nonempty bucket (0 when every degree is 0); it rises by at most one per
/// increment and is lowered by a downward scan on decrement.
#[derive(Debug, Clone)]
pub struct MaxDegreeTracker {
    degree: Vec<u32>,
    slot: Vec<u32>,
    buckets: Vec<Vec<VertexId>>,
    max: usize,
}

impl MaxDegreeTracker {
    /// All `n` vertices start in bucket 0.
    pub fn new(n: usize) -> Self {
        let bucket0: Vec<VertexId> = (0..n as VertexId).collect();
        Self {
            degree: vec![0; n],
            slot: (0..n as u32).collect(),
            buckets: vec![bucket0],
            max: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degree.is_empty()
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> u32 {
        self.degree[v as usize]
    }

    /// The current maximum out-degree.
    #[inline]
    pub fn max_degree(&self) -> u32 {
        self.max as u32
    }

    /// Vertices whose out-degree equals `d`, in unspecified order.
    pub fn bucket(&self, d: u32) -> &[VertexId] {
        self.buckets.get(d as usize).map_or(&[], Vec::as_slice)
    }

    /// The smallest-id vertex of maximum out-degree, or `None` when all
    /// degrees are zero. Scans the top bucket.
    pub fn max_vertex(&self) -> Option<VertexId> {
        if self.max == 0 {
            return None;
        }
        self.buckets[self.max].iter().copied().min()
    }

    /// Some vertex of maximum out-degree in `O(1)`: the first entry of the top
    /// bucket, which is deterministic given the update history.
    #[inline]
    pub fn top_vertex(&self) -> Option<VertexId> {
        if self.max == 0 {
            return None;
        }
        self.buckets[self.max].first().copied()
    }

    #[inline]
    pub fn increment(&mut self, v: VertexId) {
        let d = self.degree[v as usize] as usize;
        self.detach(v, d);
        if self.buckets.len() <= d + 1 {
            self.buckets.push(Vec::new());
        }
        self.attach(v, d + 1);
        if d + 1 > self.max {
            self.max = d + 1;
        }
    }

    #[inline]
    pub fn decrement(&mut self, v: VertexId) {
        let d = self.degree[v as usize] as usize;
        debug_assert!(d > 0, "decrement of a zero-degree vertex");
        self.detach(v, d);
        self.attach(v, d - 1);
        while self.max > 0 && self.buckets[self.max].is_empty() {
            self.max -= 1;
        }
    }

    /// Puts every vertex back into bucket 0.
    pub fn reset(&mut self) {
        let n = self.degree.len();
        *self = Self::new(n);
    }

    fn detach(&mut self, v: VertexId, d: usize) {
        let s = self.slot[v as usize] as usize;
        let bucket = &mut self.buckets[d];
        debug_assert_eq!(bucket[s], v);
        bucket.swap_remove(s);
        if let Some(&moved) = bucket.get(s) {
            self.slot[moved as usize] = s as u32;
        }
    }

    fn attach(&mut self, v: VertexId, d: usize) {
        let bucket = &mut self.buckets[d];
        self.slot[v as usize] = bucket.len() as u32;
        bucket.push(v);
        self.degree[v as usize] = d as u32;
    }

    /// Full consistency scan; used by tests and invariant checks.
    pub fn validate(&self) -> Result<(), String> {
        let mut seen = 0usize;
        for (d, bucket) in self.buckets.iter().enumerate() {
            for (s, &v) in bucket.iter().enumerate() {
                if self.degree[v as usize] as usize != d {
                    return Err(format!(
                        "vertex {v} in bucket {d} has degree {}",
                        self.degree[v as usize]
                    ));
                }
                if self.slot[v as usize] as usize != s {
                    return Err(format!("vertex {v} slot mismatch"));
                }
                seen += 1;
            }
        }
        if seen != self.degree.len() {
            return Err(format!(
                "{seen} vertices bucketed, expected {}",
                self.degree.len()
            ));
        }
        let true_max = self.degree.iter().copied().max().unwrap_or(0) as usize;
        if true_max != self.max {
            return Err(format!(
                "max pointer {} but true maximum {true_max}",
                self.max
            ));
        }
        Ok(())
    }
}
