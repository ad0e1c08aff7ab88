//! Ollivier curvature in the Lipschitz-function form
//! `κ(x,y) = inf { Δf(y) - Δf(x) : f 1-Lipschitz, f(x) - f(y) = 1 }`
//! for an edge `{x, y}`, with the combinatorial distance.
//!
//! The objective only reads `f` on `B₁(x) ∪ B₁(y)`, and any 1-Lipschitz
//! function on that set extends to the whole graph, so the infimum is a
//! finite linear program over that set with one constraint per ordered pair.

use crate::error::{EdgeLabel, Error, Result};
use crate::graph::WeightedBoundaryGraph;
use crate::lp::{solve, LinearProgram, LpSolution};

/// The linear program whose optimum is `κ(x, y)`.
///
/// Normalizing `f(y) = 0` and `f(x) = 1`, the free values `f(v)` are shifted
/// to `z_v = f(v) + d(v, y) ≥ 0`.
pub fn ollivier_program(graph: &WeightedBoundaryGraph, x: usize, y: usize) -> Result<LinearProgram> {
    let n = graph.vertex_count();
    if x >= n || y >= n || x == y || graph.weight(x, y) <= 0.0 {
        return Err(Error::NotAnEdge(EdgeLabel(x, y)));
    }
    let dist = graph.distances();
    let mut support: Vec<usize> = graph.neighbors(x).chain(graph.neighbors(y)).chain([x, y]).collect();
    support.sort_unstable();
    support.dedup();
    let free: Vec<usize> = support.iter().copied().filter(|&v| v != x && v != y).collect();
    let column = |v: usize| free.iter().position(|&f| f == v);
    // f(v) = z_v + shift(v)
    let shift = |v: usize| -> f64 {
        if v == x {
            1.0
        } else if v == y {
            0.0
        } else {
            -(dist[v][y] as f64)
        }
    };

    let mut constraints = Vec::new();
    let mut bounds = Vec::new();
    for &u in &support {
        for &v in &support {
            if u == v || (column(u).is_none() && column(v).is_none()) {
                continue;
            }
            let mut row = vec![0.0; free.len()];
            if let Some(c) = column(u) {
                row[c] += 1.0;
            }
            if let Some(c) = column(v) {
                row[c] -= 1.0;
            }
            constraints.push(row);
            bounds.push(dist[u][v] as f64 - shift(u) + shift(v));
        }
    }

    let (w, m) = (graph.weights(), graph.measure());
    // Δf(y) - Δf(x) = Σ_v (w_yv/m_y - w_xv/m_x) f(v) + (w_xy/m_y + Deg(x)) f(x) - (Deg(y) + w_xy/m_x) f(y)
    let coefficient = |v: usize| w[(y, v)] / m[y] - w[(x, v)] / m[x];
    let objective: Vec<f64> = free.iter().map(|&v| coefficient(v)).collect();
    let offset = w[(x, y)] / m[y] + graph.weighted_degree(x)
        + free.iter().map(|&v| coefficient(v) * shift(v)).sum::<f64>();
    Ok(LinearProgram { objective, objective_offset: offset, constraints, bounds })
}

pub fn ollivier_curvature(graph: &WeightedBoundaryGraph, x: usize, y: usize) -> Result<f64> {
    match solve(&ollivier_program(graph, x, y)?) {
        LpSolution::Optimal { value, .. } => Ok(value),
        LpSolution::Infeasible => Err(Error::Lp("infeasible")),
        LpSolution::Unbounded => Err(Error::Lp("unbounded")),
    }
}
