use super::{delegate_to_graph, AlgorithmError, DynamicOrientation};
use crate::graph_core::{OrientedGraph, VertexId};

/// Orients every new edge out of the endpoint with the smaller current
/// out-degree (ties keep `u -> v`). Never flips.
#[derive(Debug, Clone)]
pub struct Naive {
    graph: OrientedGraph,
}

impl Naive {
    pub fn new(n: usize) -> Self {
        Self {
            graph: OrientedGraph::new(n),
        }
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }
}

impl DynamicOrientation for Naive {
    fn insert(&mut self, u: VertexId, v: VertexId) -> Result<(), AlgorithmError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if self.graph.out_degree(v) < self.graph.out_degree(u) {
            self.graph.insert_oriented(v, u)?;
        } else {
            self.graph.insert_oriented(u, v)?;
        }
        Ok(())
    }

    delegate_to_graph!();
}
