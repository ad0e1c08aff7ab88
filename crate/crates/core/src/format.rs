//! On-disk graph format.
//!
//! ```json
//! {
//!   "vertices": [{"id": 0, "measure": 1.0}, {"id": 1, "measure": 1.0}],
//!   "edges": [{"u": 0, "v": 1, "weight": 1.0}],
//!   "boundary": [0]
//! }
//! ```
//!
//! Vertex ids must be exactly `0..n` in any order. Each undirected edge is
//! listed once with a nonzero weight. Unknown keys are rejected. Structural
//! axioms (connectivity, boundary conditions, signs) are not checked here;
//! call [`WeightedBoundaryGraph::validate`] on the result.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    pub boundary: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: usize,
    pub measure: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<WeightedBoundaryGraph> {
        let n = self.vertices.len();
        let mut measure = vec![None; n];
        for VertexRecord { id, measure: m } in self.vertices {
            let slot = measure
                .get_mut(id)
                .ok_or_else(|| Error::Format(format!("vertex id {id} out of range 0..{n}")))?;
            if slot.replace(m).is_some() {
                return Err(Error::Format(format!("vertex id {id} listed twice")));
            }
        }
        // every slot is filled: n distinct ids in 0..n
        let measure: Vec<f64> = measure.into_iter().map(Option::unwrap).collect();

        let mut edges = Vec::with_capacity(self.edges.len());
        for EdgeRecord { u, v, weight } in self.edges {
            if weight == 0.0 {
                return Err(Error::Format(format!("edge ({u}, {v}) has zero weight")));
            }
            edges.push((u, v, weight));
        }
        WeightedBoundaryGraph::from_edges(measure, &edges, &self.boundary)
    }

    pub fn from_graph(graph: &WeightedBoundaryGraph) -> Self {
        let vertices = graph
            .measure()
            .iter()
            .enumerate()
            .map(|(id, &measure)| VertexRecord { id, measure })
            .collect();
        let n = graph.vertex_count();
        let w = graph.weights();
        let mut edges = Vec::new();
        for u in 0..n {
            // the diagonal is included so that self loops survive a round trip
            for v in u..n {
                if w[(u, v)] != 0.0 {
                    edges.push(EdgeRecord { u, v, weight: w[(u, v)] });
                }
            }
        }
        Self { vertices, edges, boundary: graph.boundary().to_vec() }
    }
}

pub fn parse_graph(text: &str) -> Result<WeightedBoundaryGraph> {
    serde_json::from_str::<GraphFile>(text)?.into_graph()
}

pub fn parse_graph_bytes(bytes: &[u8]) -> Result<WeightedBoundaryGraph> {
    serde_json::from_slice::<GraphFile>(bytes)?.into_graph()
}

pub fn to_json(graph: &WeightedBoundaryGraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(graph)).expect("graph file serializes")
}
