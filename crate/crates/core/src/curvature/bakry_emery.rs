//! Pointwise Bakry-Émery curvature.
//!
//! With `Γ(f,g) = ½(Δ(fg) - fΔg - gΔf)` and `Γ₂(f) = ½ΔΓ(f,f) - Γ(f,Δf)`,
//! `K(x, n)` is the largest `K` with
//! `Γ₂(f)(x) ≥ (1/n)(Δf(x))² + K Γ(f)(x)` for every `f`. Both sides only see
//! `f` on the 2-ball of `x` and annihilate constants, so the search runs over
//! functions on `B₂(x)` with `f(x) = 0`.

use nalgebra::{DMatrix, DVector};

use super::Dimension;
use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;
use crate::linalg::symmetric_eigen;
use crate::operators::apply_laplacian;

const GAMMA_NULL_THRESHOLD: f64 = 1e-12;

/// `Γ(f, g)(v) = (1/2m_v) Σ_u w_vu (f(u) - f(v)) (g(u) - g(v))`.
fn gamma_at(graph: &WeightedBoundaryGraph, f: &DVector<f64>, g: &DVector<f64>, v: usize) -> f64 {
    let w = graph.weights();
    graph.neighbors(v).map(|u| w[(v, u)] * (f[u] - f[v]) * (g[u] - g[v])).sum::<f64>() / (2.0 * graph.measure()[v])
}

/// Matrices of `f ↦ Γ₂(f)(x) - (1/n)(Δf(x))²` and `f ↦ Γ(f)(x)` in the basis
/// of indicator functions of `vars`.
pub(crate) fn local_quadratic_forms(
    graph: &WeightedBoundaryGraph,
    x: usize,
    vars: &[usize],
    n: Dimension,
) -> (DMatrix<f64>, DMatrix<f64>) {
    let size = graph.vertex_count();
    let basis: Vec<DVector<f64>> = vars
        .iter()
        .map(|&v| {
            let mut e = DVector::zeros(size);
            e[v] = 1.0;
            e
        })
        .collect();
    // Δ = -(stored nonnegative Laplacian)
    let lap: Vec<DVector<f64>> = basis.iter().map(|e| -apply_laplacian(graph, e)).collect();
    let neighbors: Vec<usize> = graph.neighbors(x).collect();
    let w = graph.weights();
    let m_x = graph.measure()[x];

    let k = vars.len();
    let mut numerator = DMatrix::zeros(k, k);
    let mut gamma = DMatrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let gamma_x = gamma_at(graph, &basis[a], &basis[b], x);
            let laplace_gamma =
                neighbors.iter().map(|&v| w[(x, v)] * (gamma_at(graph, &basis[a], &basis[b], v) - gamma_x)).sum::<f64>() / m_x;
            let mixed = gamma_at(graph, &basis[a], &lap[b], x) + gamma_at(graph, &basis[b], &lap[a], x);
            let gamma2 = 0.5 * laplace_gamma - 0.5 * mixed;
            let value = gamma2 - n.inverse() * lap[a][x] * lap[b][x];
            numerator[(a, b)] = value;
            numerator[(b, a)] = value;
            gamma[(a, b)] = gamma_x;
            gamma[(b, a)] = gamma_x;
        }
    }
    (numerator, gamma)
}

/// Vertices at distance 1 or 2 from `x`, ascending.
pub(crate) fn punctured_two_ball(graph: &WeightedBoundaryGraph, x: usize) -> Vec<usize> {
    let mut inside = vec![false; graph.vertex_count()];
    for y in graph.neighbors(x) {
        inside[y] = true;
        for z in graph.neighbors(y) {
            inside[z] = true;
        }
    }
    inside[x] = false;
    (0..graph.vertex_count()).filter(|&v| inside[v]).collect()
}

/// `K(x, n)`.
pub fn vertex_curvature(graph: &WeightedBoundaryGraph, x: usize, n: Dimension) -> Result<f64> {
    let vars = punctured_two_ball(graph, x);
    if graph.neighbors(x).next().is_none() {
        return Err(Error::DegenerateGamma(x));
    }
    let (numerator, gamma) = local_quadratic_forms(graph, x, &vars, n);

    let eig = symmetric_eigen(&gamma)?;
    let top = eig.values.iter().copied().fold(0.0f64, f64::max);
    if top <= 0.0 {
        return Err(Error::DegenerateGamma(x));
    }
    let (range, null): (Vec<usize>, Vec<usize>) =
        (0..vars.len()).partition(|&i| eig.values[i] > GAMMA_NULL_THRESHOLD * top.max(1.0));
    let pick = |cols: &[usize]| DMatrix::from_fn(vars.len(), cols.len(), |r, c| eig.vectors[(r, cols[c])]);
    let (u, z) = (pick(&range), pick(&null));

    // minimize over the Γ-null directions first (Schur complement), which is
    // possible because the numerator is positive definite there
    let mut reduced = u.transpose() * &numerator * &u;
    if !null.is_empty() {
        let nn = z.transpose() * &numerator * &z;
        let un = u.transpose() * &numerator * &z;
        let chol = nn.cholesky().ok_or(Error::DegenerateGamma(x))?;
        reduced -= &un * chol.solve(&un.transpose());
    }
    let scale = DVector::from_iterator(range.len(), range.iter().map(|&i| 1.0 / eig.values[i].sqrt()));
    let scaled = DMatrix::from_diagonal(&scale) * reduced * DMatrix::from_diagonal(&scale);
    let min = symmetric_eigen(&scaled)?.values[0];
    Ok(min)
}
