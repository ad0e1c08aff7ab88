//! Weighted graphs `(G, m, w)` with an optional vertex boundary `B`.
//!
//! Storage is dense: the symmetric weight matrix is kept in full. Vertices
//! are addressed by their index `0..n`. The interior `Ω = V \ B` is cached in
//! ascending index order, and every operator acting on functions on `Ω` uses
//! that order for its rows and columns.

use std::collections::VecDeque;

use nalgebra::DMatrix;

use crate::error::{Error, GraphValidationError, Result, ValidationKind};

/// Index of a vertex, stable within one graph.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedBoundaryGraph {
    measure: Vec<f64>,
    weights: DMatrix<f64>,
    in_boundary: Vec<bool>,
    boundary: Vec<VertexId>,
    interior: Vec<VertexId>,
    /// Position of each vertex inside `boundary` or `interior`.
    local_index: Vec<usize>,
}

/// Volumes `V_Ω`, `V_B` and `V_G = V_Ω + V_B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Volumes {
    pub interior: f64,
    pub boundary: f64,
    pub total: f64,
}

impl WeightedBoundaryGraph {
    /// Assemble a graph from a measure vector, a square weight matrix and a
    /// boundary vertex list. Only shapes and index ranges are checked here;
    /// the structural axioms are checked by [`validate`](Self::validate).
    pub fn from_parts(measure: Vec<f64>, weights: DMatrix<f64>, boundary: &[VertexId]) -> Result<Self> {
        let n = measure.len();
        if n == 0 {
            return Err(Error::Format("graph has no vertices".into()));
        }
        if weights.nrows() != n || weights.ncols() != n {
            return Err(Error::Format(format!(
                "weight matrix is {}x{} but there are {n} vertices",
                weights.nrows(),
                weights.ncols()
            )));
        }
        if measure.iter().chain(weights.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Format("measures and weights must be finite".into()));
        }
        let mut in_boundary = vec![false; n];
        for &x in boundary {
            if x >= n {
                return Err(Error::Format(format!("boundary vertex {x} out of range")));
            }
            if in_boundary[x] {
                return Err(Error::Format(format!("boundary vertex {x} listed twice")));
            }
            in_boundary[x] = true;
        }
        let mut local_index = vec![0; n];
        let mut boundary = Vec::new();
        let mut interior = Vec::new();
        for (x, &b) in in_boundary.iter().enumerate() {
            let list = if b { &mut boundary } else { &mut interior };
            local_index[x] = list.len();
            list.push(x);
        }
        Ok(Self { measure, weights, in_boundary, boundary, interior, local_index })
    }

    /// Build from an edge list `(u, v, w)`; each undirected edge appears once.
    pub fn from_edges(measure: Vec<f64>, edges: &[(VertexId, VertexId, f64)], boundary: &[VertexId]) -> Result<Self> {
        let n = measure.len();
        let mut weights = DMatrix::zeros(n, n);
        for &(u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::Format(format!("edge ({u}, {v}) references a missing vertex")));
            }
            if weights[(u, v)] != 0.0 {
                return Err(Error::Format(format!("edge ({u}, {v}) listed twice")));
            }
            weights[(u, v)] = w;
            weights[(v, u)] = w;
        }
        Self::from_parts(measure, weights, boundary)
    }

    /// Unit measure and unit weight on the given edges.
    pub fn unit(n: usize, edges: &[(VertexId, VertexId)], boundary: &[VertexId]) -> Result<Self> {
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        Self::from_edges(vec![1.0; n], &edges, boundary)
    }

    pub fn vertex_count(&self) -> usize {
        self.measure.len()
    }

    pub fn measure(&self) -> &[f64] {
        &self.measure
    }

    pub fn weights(&self) -> &DMatrix<f64> {
        &self.weights
    }

    pub fn weight(&self, x: VertexId, y: VertexId) -> f64 {
        self.weights[(x, y)]
    }

    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn interior(&self) -> &[VertexId] {
        &self.interior
    }

    pub fn is_boundary(&self, x: VertexId) -> bool {
        self.in_boundary[x]
    }

    /// Position of `x` within `boundary()` or `interior()`, whichever holds it.
    pub fn local_index(&self, x: VertexId) -> usize {
        self.local_index[x]
    }

    pub fn boundary_measure(&self) -> Vec<f64> {
        self.boundary.iter().map(|&x| self.measure[x]).collect()
    }

    pub fn interior_measure(&self) -> Vec<f64> {
        self.interior.iter().map(|&y| self.measure[y]).collect()
    }

    pub fn neighbors(&self, x: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(move |&y| self.weights[(x, y)] > 0.0)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId, f64)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let w = self.weights[(u, v)];
                if w != 0.0 {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    /// Check every axiom of a weighted graph with boundary, reporting the
    /// first violation in a fixed order.
    pub fn validate(&self) -> Result<(), GraphValidationError> {
        self.check_weights_and_measure()?;
        self.check_boundary()?;
        self.check_connected()
    }

    /// Like [`validate`](Self::validate) but for a plain weighted graph: the
    /// boundary axioms are skipped and an empty boundary is accepted.
    pub fn validate_plain(&self) -> Result<(), GraphValidationError> {
        self.check_weights_and_measure()?;
        self.check_connected()
    }

    fn check_weights_and_measure(&self) -> Result<(), GraphValidationError> {
        let n = self.vertex_count();
        let w = &self.weights;
        if let Some(x) = (0..n).find(|&x| w[(x, x)] != 0.0) {
            return Err(GraphValidationError::new(
                ValidationKind::SelfLoop,
                vec![x],
                format_args!("w[{x}][{x}] = {}", w[(x, x)]),
            ));
        }
        for x in 0..n {
            for y in x + 1..n {
                if w[(x, y)] != w[(y, x)] {
                    return Err(GraphValidationError::new(
                        ValidationKind::AsymmetricWeight,
                        vec![x, y],
                        format_args!("w[{x}][{y}] = {} but w[{y}][{x}] = {}", w[(x, y)], w[(y, x)]),
                    ));
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if w[(x, y)] < 0.0 {
                    return Err(GraphValidationError::new(
                        ValidationKind::NegativeWeight,
                        vec![x, y],
                        format_args!("w[{x}][{y}] = {}", w[(x, y)]),
                    ));
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| self.measure[x] <= 0.0) {
            return Err(GraphValidationError::new(
                ValidationKind::NonpositiveMeasure,
                vec![x],
                format_args!("m[{x}] = {}", self.measure[x]),
            ));
        }
        Ok(())
    }

    fn check_boundary(&self) -> Result<(), GraphValidationError> {
        if self.boundary.is_empty() {
            return Err(GraphValidationError::new(ValidationKind::EmptyBoundary, vec![], "B is empty"));
        }
        for (i, &x) in self.boundary.iter().enumerate() {
            for &y in &self.boundary[i + 1..] {
                if self.weights[(x, y)] > 0.0 {
                    return Err(GraphValidationError::new(
                        ValidationKind::BoundaryEdge,
                        vec![x, y],
                        format_args!("boundary vertices {x} and {y} are adjacent"),
                    ));
                }
            }
        }
        for &x in &self.boundary {
            if !self.interior.iter().any(|&y| self.weights[(x, y)] > 0.0) {
                return Err(GraphValidationError::new(
                    ValidationKind::IsolatedBoundaryVertex,
                    vec![x],
                    format_args!("boundary vertex {x} has no interior neighbor"),
                ));
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<(), GraphValidationError> {
        let labels = component_labels(&self.weights, &(0..self.vertex_count()).collect::<Vec<_>>());
        if let Some(x) = labels.iter().position(|&c| c != 0) {
            return Err(GraphValidationError::new(
                ValidationKind::Disconnected,
                vec![x],
                format_args!("vertex {x} is not reachable from vertex 0"),
            ));
        }
        Ok(())
    }

    /// `Deg(x) = (1/m_x) Σ_y w_xy`.
    pub fn weighted_degree(&self, x: VertexId) -> f64 {
        self.weights.row(x).sum() / self.measure[x]
    }

    /// `Deg_b(y) = (1/m_y) Σ_{x∈B} w_xy` for an interior vertex `y`.
    pub fn boundary_degree(&self, y: VertexId) -> Result<f64> {
        self.require_interior(y)?;
        Ok(self.boundary.iter().map(|&x| self.weights[(x, y)]).sum::<f64>() / self.measure[y])
    }

    /// `Deg_Ω(y) = (1/m_y) Σ_{z∈Ω} w_yz` for an interior vertex `y`.
    pub fn interior_degree(&self, y: VertexId) -> Result<f64> {
        self.require_interior(y)?;
        Ok(self.interior.iter().map(|&z| self.weights[(y, z)]).sum::<f64>() / self.measure[y])
    }

    /// `Deg_b` on `Ω`, in interior order.
    pub fn boundary_degrees(&self) -> Vec<f64> {
        self.interior.iter().map(|&y| self.boundary_degree(y).expect("interior vertex")).collect()
    }

    fn require_interior(&self, y: VertexId) -> Result<()> {
        if y >= self.vertex_count() {
            return Err(Error::InvalidArgument(format!("vertex {y} out of range")));
        }
        if self.in_boundary[y] {
            return Err(Error::NotInterior(y));
        }
        Ok(())
    }

    pub fn volumes(&self) -> Volumes {
        let interior = self.interior.iter().map(|&y| self.measure[y]).sum::<f64>();
        let boundary = self.boundary.iter().map(|&x| self.measure[x]).sum::<f64>();
        Volumes { interior, boundary, total: interior + boundary }
    }

    /// The induced weighted graph `G|_Ω` with empty boundary. Vertex `k` of
    /// the result is `interior()[k]` of `self`. The result may be
    /// disconnected.
    pub fn interior_subgraph(&self) -> WeightedBoundaryGraph {
        let idx = &self.interior;
        let weights = DMatrix::from_fn(idx.len(), idx.len(), |i, j| self.weights[(idx[i], idx[j])]);
        Self::from_parts(self.interior_measure(), weights, &[]).expect("restriction of a well-formed graph")
    }

    /// Number of connected components of `G|_Ω`.
    pub fn interior_component_count(&self) -> usize {
        component_labels(&self.weights, &self.interior).into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_unit_weight(&self) -> bool {
        self.measure.iter().all(|&m| m == 1.0) && self.weights.iter().all(|&w| w == 0.0 || w == 1.0)
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (0..self.vertex_count()).all(|x| (self.weighted_degree(x) - 1.0).abs() <= tol)
    }

    /// Combinatorial distances on the support of `w`; `usize::MAX` marks
    /// unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n)
            .map(|s| {
                let mut dist = vec![usize::MAX; n];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for v in self.neighbors(u) {
                        if dist[v] == usize::MAX {
                            dist[v] = dist[u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
                dist
            })
            .collect()
    }
}

/// Connected-component label (0-based, in order of first appearance) for each
/// vertex of `subset`, using only edges inside `subset`.
fn component_labels(weights: &DMatrix<f64>, subset: &[usize]) -> Vec<usize> {
    let mut label = vec![usize::MAX; subset.len()];
    let mut next = 0;
    for start in 0..subset.len() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..subset.len() {
                if label[j] == usize::MAX && weights[(subset[i], subset[j])] > 0.0 {
                    label[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    label
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(boundary: &[usize]) -> WeightedBoundaryGraph {
        WeightedBoundaryGraph::unit(3, &[(0, 1), (1, 2)], boundary).unwrap()
    }

    fn k22() -> WeightedBoundaryGraph {
        WeightedBoundaryGraph::unit(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[0, 1]).unwrap()
    }

    fn kind(g: &WeightedBoundaryGraph) -> Option<ValidationKind> {
        g.validate().err().map(|e| e.kind)
    }

    #[test]
    fn validate_accepts_path_with_both_ends_on_boundary() {
        assert_eq!(kind(&p3(&[0, 2])), None);
    }

    #[test]
    fn validate_reports_each_violation() {
        let tri = WeightedBoundaryGraph::unit(3, &[(0, 1), (1, 2), (0, 2)], &[0, 1]).unwrap();
        assert_eq!(kind(&tri), Some(ValidationKind::BoundaryEdge));

        let two_edges = WeightedBoundaryGraph::unit(4, &[(0, 1), (2, 3)], &[0]).unwrap();
        assert_eq!(kind(&two_edges), Some(ValidationKind::Disconnected));

        let mut w = p3(&[0]).weights().clone();
        w[(1, 1)] = 1.0;
        let looped = WeightedBoundaryGraph::from_parts(vec![1.0; 3], w, &[0]).unwrap();
        assert_eq!(kind(&looped), Some(ValidationKind::SelfLoop));

        let mut w = p3(&[0]).weights().clone();
        w[(0, 1)] = 2.0;
        let asym = WeightedBoundaryGraph::from_parts(vec![1.0; 3], w, &[0]).unwrap();
        assert_eq!(kind(&asym), Some(ValidationKind::AsymmetricWeight));

        let neg = WeightedBoundaryGraph::from_edges(vec![1.0; 3], &[(0, 1, 1.0), (1, 2, -1.0)], &[0]).unwrap();
        assert_eq!(kind(&neg), Some(ValidationKind::NegativeWeight));

        let zero_m = WeightedBoundaryGraph::from_edges(vec![1.0, 0.0, 1.0], &[(0, 1, 1.0), (1, 2, 1.0)], &[0]).unwrap();
        assert_eq!(kind(&zero_m), Some(ValidationKind::NonpositiveMeasure));

        assert_eq!(kind(&p3(&[])), Some(ValidationKind::EmptyBoundary));
        assert!(p3(&[]).validate_plain().is_ok());

        // boundary vertex 3 has no edges at all
        let iso = WeightedBoundaryGraph::unit(4, &[(0, 1), (1, 2)], &[0, 3]).unwrap();
        assert_eq!(kind(&iso), Some(ValidationKind::IsolatedBoundaryVertex));
    }

    #[test]
    fn validation_order_is_fixed() {
        // both a self loop and a boundary edge: the self loop wins
        let mut w = DMatrix::zeros(3, 3);
        w[(0, 1)] = 1.0;
        w[(1, 0)] = 1.0;
        w[(2, 2)] = 1.0;
        let g = WeightedBoundaryGraph::from_parts(vec![1.0; 3], w, &[0, 1]).unwrap();
        assert_eq!(kind(&g), Some(ValidationKind::SelfLoop));
    }

    #[test]
    fn degrees() {
        let g = p3(&[0, 2]);
        assert_eq!(g.weighted_degree(1), 2.0);
        assert_eq!(g.weighted_degree(0), 1.0);
        let g = WeightedBoundaryGraph::from_edges(vec![1.0, 2.0, 1.0], &[(0, 1, 3.0), (1, 2, 1.0)], &[0]).unwrap();
        assert_eq!(g.weighted_degree(1), 2.0);

        assert_eq!(p3(&[0, 2]).boundary_degree(1).unwrap(), 2.0);
        assert_eq!(p3(&[2]).boundary_degree(0).unwrap(), 0.0);
        assert!(matches!(p3(&[2]).boundary_degree(2), Err(Error::NotInterior(2))));
        for y in [2, 3] {
            assert_eq!(k22().boundary_degree(y).unwrap(), 2.0);
            assert_eq!(k22().interior_degree(y).unwrap(), 0.0);
        }
        assert_eq!(p3(&[2]).interior_degree(1).unwrap(), 1.0);
    }

    #[test]
    fn interior_subgraphs() {
        let sub = k22().interior_subgraph();
        assert_eq!(sub.vertex_count(), 2);
        assert!(sub.edges().is_empty());
        assert_eq!(k22().interior_component_count(), 2);

        let sub = p3(&[2]).interior_subgraph();
        assert_eq!(sub.edges(), vec![(0, 1, 1.0)]);

        let p5 = WeightedBoundaryGraph::unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[0, 4]).unwrap();
        assert_eq!(p5.interior_subgraph().edges(), vec![(0, 1, 1.0), (1, 2, 1.0)]);
    }

    #[test]
    fn volume_sums() {
        let g = WeightedBoundaryGraph::unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[0, 4]).unwrap();
        assert_eq!(g.volumes(), Volumes { interior: 3.0, boundary: 2.0, total: 5.0 });
        let g = WeightedBoundaryGraph::from_edges(vec![7.0, 3.0], &[(0, 1, 1.0)], &[1]).unwrap();
        assert_eq!(g.volumes(), Volumes { interior: 7.0, boundary: 3.0, total: 10.0 });
        let g = WeightedBoundaryGraph::from_edges(vec![2.5; 5], &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0)], &[0, 4])
            .unwrap();
        assert_eq!(g.volumes(), Volumes { interior: 7.5, boundary: 5.0, total: 12.5 });
    }

    #[test]
    fn shape_errors() {
        assert!(WeightedBoundaryGraph::from_parts(vec![], DMatrix::zeros(0, 0), &[]).is_err());
        assert!(WeightedBoundaryGraph::unit(3, &[(0, 5)], &[]).is_err());
        assert!(WeightedBoundaryGraph::unit(3, &[(0, 1)], &[1, 1]).is_err());
        assert!(WeightedBoundaryGraph::unit(3, &[(0, 1), (1, 0)], &[]).is_err());
    }

    #[test]
    fn distances_on_path() {
        let g = p3(&[0]);
        assert_eq!(g.distances()[0], vec![0, 1, 2]);
    }
}
