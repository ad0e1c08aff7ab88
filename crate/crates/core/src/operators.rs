//! Laplacian-type operators on a weighted graph with boundary.
//!
//! Every operator is stored with its nonnegative sign (`-Δ`, `-Δ^D`, ...), as
//! a dense matrix acting on column vectors of function values. Functions on
//! `V` are indexed by vertex; functions on `Ω` or `B` follow the order of
//! [`WeightedBoundaryGraph::interior`] / [`WeightedBoundaryGraph::boundary`].
//!
//! The Dirichlet and Neumann Laplacians are assembled twice, once from the
//! extension maps `E₀`, `N₀` and once from the algebraic identities
//!
//! ```text
//! -Δ^D = -Δ_Ω + diag(Deg_b)
//! -Δ^N = -Δ_Ω + diag(Deg_b) - A_B Deg⁻¹ A_Ω
//! ```
//!
//! so that tests can hold the two routes against each other.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::graph::WeightedBoundaryGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorLabel {
    FullLaplacian,
    DirichletLaplacian,
    NeumannLaplacian,
    InteriorLaplacian,
}

impl OperatorLabel {
    pub const ALL: [OperatorLabel; 4] = [
        OperatorLabel::FullLaplacian,
        OperatorLabel::DirichletLaplacian,
        OperatorLabel::NeumannLaplacian,
        OperatorLabel::InteriorLaplacian,
    ];
}

/// A matrix that is self-adjoint for `⟨u, v⟩ = Σ u(x) v(x) m_x`, i.e.
/// `m_i A_ij = m_j A_ji`.
#[derive(Debug, Clone, PartialEq)]
pub struct SelfAdjointOperator {
    pub matrix: DMatrix<f64>,
    pub measure: Vec<f64>,
    pub label: OperatorLabel,
}

impl SelfAdjointOperator {
    pub fn dim(&self) -> usize {
        self.measure.len()
    }

    pub fn apply(&self, u: &DVector<f64>) -> DVector<f64> {
        &self.matrix * u
    }

    /// `max |m_i A_ij - m_j A_ji|` relative to `max(1, max |m_i A_ij|)`.
    pub fn self_adjointness_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst: f64 = 0.0;
        let mut scale: f64 = 1.0;
        for i in 0..n {
            for j in 0..n {
                let a = self.measure[i] * self.matrix[(i, j)];
                let b = self.measure[j] * self.matrix[(j, i)];
                worst = worst.max((a - b).abs());
                scale = scale.max(a.abs());
            }
        }
        worst / scale
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }
}

/// `A_Ω: R^Ω → R^B` or its adjoint `A_B: R^B → R^Ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMap {
    pub matrix: DMatrix<f64>,
    pub source_measure: Vec<f64>,
    pub target_measure: Vec<f64>,
}

/// `(-Δu)(x) = (1/m_x) Σ_y (u(x) - u(y)) w_xy` for `u` on `V`.
pub fn apply_laplacian(graph: &WeightedBoundaryGraph, u: &DVector<f64>) -> DVector<f64> {
    let w = graph.weights();
    let m = graph.measure();
    DVector::from_fn(graph.vertex_count(), |x, _| {
        (0..graph.vertex_count()).map(|y| (u[x] - u[y]) * w[(x, y)]).sum::<f64>() / m[x]
    })
}

/// Laplacian matrix of an arbitrary symmetric weight matrix with measure.
fn laplacian_matrix(weights: &DMatrix<f64>, measure: &[f64]) -> DMatrix<f64> {
    let n = measure.len();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            weights.row(i).sum() / measure[i] - weights[(i, i)] / measure[i]
        } else {
            -weights[(i, j)] / measure[i]
        }
    })
}

pub fn full_laplacian(graph: &WeightedBoundaryGraph) -> SelfAdjointOperator {
    SelfAdjointOperator {
        matrix: laplacian_matrix(graph.weights(), graph.measure()),
        measure: graph.measure().to_vec(),
        label: OperatorLabel::FullLaplacian,
    }
}

/// `-Δ_Ω`, the Laplacian of the induced subgraph on `Ω`.
pub fn interior_laplacian(graph: &WeightedBoundaryGraph) -> SelfAdjointOperator {
    let sub = graph.interior_subgraph();
    SelfAdjointOperator {
        matrix: laplacian_matrix(sub.weights(), sub.measure()),
        measure: sub.measure().to_vec(),
        label: OperatorLabel::InteriorLaplacian,
    }
}

/// `E₀(u)`: `u` on `Ω`, zero on `B`.
pub fn zero_extension(graph: &WeightedBoundaryGraph, u: &DVector<f64>) -> DVector<f64> {
    assert_eq!(u.len(), graph.interior().len());
    let mut out = DVector::zeros(graph.vertex_count());
    for (k, &y) in graph.interior().iter().enumerate() {
        out[y] = u[k];
    }
    out
}

/// `N₀(u)`: `u` on `Ω`; on `x ∈ B` the `w`-weighted average of `u` over the
/// interior neighbors of `x`.
pub fn normal_extension(graph: &WeightedBoundaryGraph, u: &DVector<f64>) -> DVector<f64> {
    let mut out = zero_extension(graph, u);
    let (a_omega, _) = boundary_map(graph);
    let au = &a_omega.matrix * u;
    for (k, &x) in graph.boundary().iter().enumerate() {
        out[x] = au[k] / boundary_vertex_degree(graph, x);
    }
    out
}

/// `∂u/∂n (x) = (-Δu)(x)` for `x ∈ B`, in boundary order.
pub fn normal_derivative(graph: &WeightedBoundaryGraph, u: &DVector<f64>) -> DVector<f64> {
    let lap = apply_laplacian(graph, u);
    DVector::from_iterator(graph.boundary().len(), graph.boundary().iter().map(|&x| lap[x]))
}

fn restrict_to_interior(graph: &WeightedBoundaryGraph, f: &DVector<f64>) -> DVector<f64> {
    DVector::from_iterator(graph.interior().len(), graph.interior().iter().map(|&y| f[y]))
}

/// Matrix of `u ↦ (-Δ ext(u))|_Ω`, assembled column by column.
fn restricted_composition(
    graph: &WeightedBoundaryGraph,
    extension: impl Fn(&WeightedBoundaryGraph, &DVector<f64>) -> DVector<f64>,
) -> DMatrix<f64> {
    let k = graph.interior().len();
    let mut matrix = DMatrix::zeros(k, k);
    for j in 0..k {
        let mut e = DVector::zeros(k);
        e[j] = 1.0;
        let column = restrict_to_interior(graph, &apply_laplacian(graph, &extension(graph, &e)));
        matrix.set_column(j, &column);
    }
    matrix
}

/// `-Δ^D u = (-Δ E₀(u))|_Ω`.
pub fn dirichlet_laplacian(graph: &WeightedBoundaryGraph) -> SelfAdjointOperator {
    SelfAdjointOperator {
        matrix: restricted_composition(graph, zero_extension),
        measure: graph.interior_measure(),
        label: OperatorLabel::DirichletLaplacian,
    }
}

/// `-Δ_Ω + diag(Deg_b)`.
pub fn dirichlet_laplacian_by_identity(graph: &WeightedBoundaryGraph) -> SelfAdjointOperator {
    let mut op = interior_laplacian(graph);
    for (k, d) in graph.boundary_degrees().into_iter().enumerate() {
        op.matrix[(k, k)] += d;
    }
    op.label = OperatorLabel::DirichletLaplacian;
    op
}

/// `-Δ^N u = (-Δ N₀(u))|_Ω`.
pub fn neumann_laplacian(graph: &WeightedBoundaryGraph) -> SelfAdjointOperator {
    SelfAdjointOperator {
        matrix: restricted_composition(graph, normal_extension),
        measure: graph.interior_measure(),
        label: OperatorLabel::NeumannLaplacian,
    }
}

/// `-Δ_Ω + diag(Deg_b) - A_B Deg⁻¹ A_Ω`.
pub fn neumann_laplacian_by_identity(graph: &WeightedBoundaryGraph) -> SelfAdjointOperator {
    let mut op = dirichlet_laplacian_by_identity(graph);
    op.matrix -= dirichlet_neumann_gap(graph);
    op.label = OperatorLabel::NeumannLaplacian;
    op
}

fn boundary_vertex_degree(graph: &WeightedBoundaryGraph, x: usize) -> f64 {
    let d = graph.weighted_degree(x);
    assert!(d > 0.0, "boundary vertex {x} has zero degree");
    d
}

/// `A_Ω u(x) = (1/m_x) Σ_{y∈Ω} u(y) w_xy` and its adjoint
/// `A_B f(y) = (1/m_y) Σ_{x∈B} f(x) w_xy`.
pub fn boundary_map(graph: &WeightedBoundaryGraph) -> (BoundaryMap, BoundaryMap) {
    let (b, o) = (graph.boundary(), graph.interior());
    let m = graph.measure();
    let a_omega = DMatrix::from_fn(b.len(), o.len(), |i, j| graph.weight(b[i], o[j]) / m[b[i]]);
    let a_boundary = DMatrix::from_fn(o.len(), b.len(), |j, i| graph.weight(b[i], o[j]) / m[o[j]]);
    (
        BoundaryMap { matrix: a_omega, source_measure: graph.interior_measure(), target_measure: graph.boundary_measure() },
        BoundaryMap { matrix: a_boundary, source_measure: graph.boundary_measure(), target_measure: graph.interior_measure() },
    )
}

/// `A_B Deg⁻¹ A_Ω` on `R^Ω`, which equals `-Δ^D - (-Δ^N)`.
pub fn dirichlet_neumann_gap(graph: &WeightedBoundaryGraph) -> DMatrix<f64> {
    let (a_omega, a_boundary) = boundary_map(graph);
    let inv_deg = DVector::from_iterator(
        graph.boundary().len(),
        graph.boundary().iter().map(|&x| 1.0 / boundary_vertex_degree(graph, x)),
    );
    a_boundary.matrix * DMatrix::from_diagonal(&inv_deg) * a_omega.matrix
}

/// `⟨du, dv⟩ = Σ_{x<y} (u(y)-u(x)) (v(y)-v(x)) w_xy` for `u, v` on `V`.
pub fn dirichlet_form(graph: &WeightedBoundaryGraph, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    graph.edges().into_iter().map(|(x, y, w)| (u[y] - u[x]) * (v[y] - v[x]) * w).sum()
}
