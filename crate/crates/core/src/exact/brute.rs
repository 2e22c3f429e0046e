use super::{ExactError, ExactResult, StaticGraph};

/// Largest edge count accepted by [`brute_force_optimum`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 25;

/// Tries all `2^m` orientations. Bit `i` of the mask set means edge `i` is
/// stored as `(v, u)` instead of `(u, v)`.
pub fn brute_force_optimum(g: &StaticGraph) -> Result<ExactResult, ExactError> {
    let m = g.m();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(ExactError::TooLarge {
            edges: m,
            max: BRUTE_FORCE_MAX_EDGES,
        });
    }
    let edges = g.edges();
    let mut out = vec![0u32; g.n()];
    let mut best = (u32::MAX, 0u32);
    for mask in 0u32..(1u32 << m) {
        out.iter_mut().for_each(|d| *d = 0);
        let mut worst = 0;
        for (i, &(u, v)) in edges.iter().enumerate() {
            let src = if mask >> i & 1 == 0 { u } else { v };
            let d = &mut out[src as usize];
            *d += 1;
            worst = worst.max(*d);
            if worst >= best.0 {
                break;
            }
        }
        if worst < best.0 {
            best = (worst, mask);
        }
    }
    let (phi, mask) = best;
    let witness = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
        .collect();
    Ok(ExactResult { phi, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::validate_orientation;

    fn complete(n: u32) -> StaticGraph {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        StaticGraph::new(n as usize, edges).unwrap()
    }

    #[test]
    fn small_anchors() {
        let tri = complete(3);
        assert_eq!(brute_force_optimum(&tri).unwrap().phi, 1);
        let single = StaticGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(brute_force_optimum(&single).unwrap().phi, 1);
        let empty = StaticGraph::new(4, vec![]).unwrap();
        assert_eq!(brute_force_optimum(&empty).unwrap().phi, 0);
        let k4 = complete(4);
        let r = brute_force_optimum(&k4).unwrap();
        assert_eq!(r.phi, 2);
        assert_eq!(validate_orientation(&k4, &r.witness), Ok(2));
    }

    #[test]
    fn too_large() {
        let g = complete(8); // 28 edges
        assert_eq!(
            brute_force_optimum(&g),
            Err(ExactError::TooLarge { edges: 28, max: 25 })
        );
    }
}
