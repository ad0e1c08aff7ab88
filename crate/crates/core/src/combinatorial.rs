//! Edge connectivity and the Fiedler-type and Friedman-type lower bounds for
//! unit-weight graphs with boundary.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::certificate::{ComparisonCertificate, IndexMargin, TheoremId};
use crate::comparisons::Analysis;
use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;
use crate::operators::dirichlet_laplacian;
use crate::spectra::eigensolve;

/// Which graph an edge-connectivity query runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgraph {
    Whole,
    Interior,
}

/// Global minimum cut weight by Stoer-Wagner. Zero for a single vertex or a
/// disconnected graph.
pub fn stoer_wagner(weights: &DMatrix<f64>) -> f64 {
    let n = weights.nrows();
    if n < 2 {
        return 0.0;
    }
    let mut w = weights.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    while active.len() > 1 {
        let mut added = vec![false; n];
        let mut tightness = vec![0.0f64; n];
        let (mut prev, mut last) = (active[0], active[0]);
        for step in 0..active.len() {
            let next = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by(|&&a, &&b| tightness[a].total_cmp(&tightness[b]).then(b.cmp(&a)))
                .expect("unadded vertex remains");
            added[next] = true;
            if step == active.len() - 1 {
                best = best.min(tightness[next]);
            }
            prev = last;
            last = next;
            for &v in &active {
                if !added[v] {
                    tightness[v] += w[(next, v)];
                }
            }
        }
        // merge `last` into `prev`
        for &v in &active {
            let add = w[(last, v)];
            w[(prev, v)] += add;
            w[(v, prev)] += add;
        }
        w[(prev, prev)] = 0.0;
        active.retain(|&v| v != last);
    }
    best
}

fn require_unit_weight(graph: &WeightedBoundaryGraph) -> Result<()> {
    if graph.is_unit_weight() {
        Ok(())
    } else {
        Err(Error::NotUnitWeight("measures and edge weights must all equal 1".into()))
    }
}

/// Minimum number of edges whose removal disconnects the graph.
pub fn edge_connectivity(graph: &WeightedBoundaryGraph, which: Subgraph) -> Result<usize> {
    require_unit_weight(graph)?;
    let cut = match which {
        Subgraph::Whole => stoer_wagner(graph.weights()),
        Subgraph::Interior => stoer_wagner(graph.interior_subgraph().weights()),
    };
    Ok(cut.round() as usize)
}

/// `μ_i(P_i) = 2(1 + cos(π/i))`, the largest Laplacian eigenvalue of the
/// unit path on `i` vertices.
pub fn path_largest_eigenvalue(i: usize) -> f64 {
    2.0 * (1.0 + (PI / i as f64).cos())
}

/// `𝒫(k, λ)`: first Dirichlet eigenvalue of the path `0 – 1 – … – k` with
/// `B = {0}`, unit measures, unit weights except `w_01 = λ`.
pub fn path_dirichlet_value(k: usize, lambda: f64) -> Result<f64> {
    if k == 0 || lambda.is_nan() || lambda <= 0.0 {
        return Err(Error::InvalidArgument(format!("need k >= 1 and lambda > 0, got k={k}, lambda={lambda}")));
    }
    let edges: Vec<_> = (0..k).map(|j| (j, j + 1, if j == 0 { lambda } else { 1.0 })).collect();
    let path = WeightedBoundaryGraph::from_edges(vec![1.0; k + 1], &edges, &[0])?;
    Ok(eigensolve(&dirichlet_laplacian(&path))?.eigenvalues[0])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathEigenData {
    pub i: usize,
    pub k: usize,
    pub mu_max_path: f64,
    pub p_value: f64,
}

impl PathEigenData {
    pub fn new(i: usize, k: usize) -> Result<Self> {
        let mu_max_path = path_largest_eigenvalue(i);
        Ok(Self { i, k, mu_max_path, p_value: path_dirichlet_value(k, mu_max_path)? })
    }
}

/// Friedman-type lower bound for the `i`-th eigenvalue on `n` vertices.
pub fn friedman_lower_bound(i: usize, n: usize) -> Result<f64> {
    let k = n / i;
    if n.is_multiple_of(i) {
        Ok(PathEigenData::new(i, k)?.p_value)
    } else {
        Ok(2.0 * (1.0 - (PI / (2 * k + 1) as f64).cos()))
    }
}

/// `2 e (1 - cos(π/n))`.
pub fn fiedler_lower_bound(connectivity: usize, n: usize) -> f64 {
    2.0 * connectivity as f64 * (1.0 - (PI / n as f64).cos())
}

pub fn fiedler_bounds(analysis: &Analysis<'_>, tol: f64) -> Result<ComparisonCertificate> {
    let graph = analysis.graph;
    require_unit_weight(graph)?;
    let (nv, no) = (graph.vertex_count(), graph.interior().len());
    if no < 2 {
        return Ok(ComparisonCertificate::not_applicable(TheoremId::FiedlerType, None, "|Omega| < 2"));
    }
    let spectra = &analysis.spectra;
    let (nu2, lambda2) = (spectra.nu()[1], spectra.lambda()[1]);
    let s1 = spectra.singular.smallest_squared();
    let min_deg_b = graph.boundary_degrees().into_iter().fold(f64::INFINITY, f64::min);
    let whole = fiedler_lower_bound(edge_connectivity(graph, Subgraph::Whole)?, nv);
    let inner = fiedler_lower_bound(edge_connectivity(graph, Subgraph::Interior)?, no);
    let records = vec![
        IndexMargin::new(2, "item 1: nu_2", nu2, Some(whole), None),
        IndexMargin::new(2, "item 2: lambda_2", lambda2, Some(whole + s1), None),
        IndexMargin::new(2, "item 3: nu_2", nu2, Some(inner), None),
        IndexMargin::new(2, "item 4: lambda_2", lambda2, Some(inner + s1), None),
        IndexMargin::new(2, "item 5: lambda_2", lambda2, Some(inner + min_deg_b), None),
    ];
    Ok(ComparisonCertificate::from_records(TheoremId::FiedlerType, None, records, analysis.absolute(tol)))
}

/// Two certificates: items 1–2 (counting vertices of `G`) and items 3–5
/// (counting vertices of `Ω`; not applicable when `G|_Ω` is disconnected).
pub fn friedman_bounds(analysis: &Analysis<'_>, tol: f64) -> Result<Vec<ComparisonCertificate>> {
    let graph = analysis.graph;
    require_unit_weight(graph)?;
    let (nv, no) = (graph.vertex_count(), graph.interior().len());
    let spectra = &analysis.spectra;
    let s1 = spectra.singular.smallest_squared();
    let min_deg_b = graph.boundary_degrees().into_iter().fold(f64::INFINITY, f64::min);
    let whole_label = Some("items 1-2 (k = floor(|V|/i))".to_string());
    let inner_label = Some("items 3-5 (k = floor(|Omega|/i))".to_string());
    if no < 2 {
        return Ok(vec![
            ComparisonCertificate::not_applicable(TheoremId::FriedmanType, whole_label, "|Omega| < 2"),
            ComparisonCertificate::not_applicable(TheoremId::FriedmanType, inner_label, "|Omega| < 2"),
        ]);
    }

    let mut whole = Vec::new();
    for i in 2..=no {
        let b = friedman_lower_bound(i, nv)?;
        let (nu, lambda) = (spectra.nu()[i - 1], spectra.lambda()[i - 1]);
        whole.push(IndexMargin::new(i, format!("item 1: nu_{i}"), nu, Some(b), None));
        whole.push(IndexMargin::new(i, format!("item 2: lambda_{i}"), lambda, Some(b + s1), None));
    }
    let mut out = vec![ComparisonCertificate::from_records(TheoremId::FriedmanType, whole_label, whole, analysis.absolute(tol))];

    if graph.interior_component_count() != 1 {
        out.push(ComparisonCertificate::not_applicable(TheoremId::FriedmanType, inner_label, "interior subgraph is disconnected"));
        return Ok(out);
    }
    let mut inner = Vec::new();
    for i in 2..=no {
        let b = friedman_lower_bound(i, no)?;
        let (nu, lambda) = (spectra.nu()[i - 1], spectra.lambda()[i - 1]);
        inner.push(IndexMargin::new(i, format!("item 3: nu_{i}"), nu, Some(b), None));
        inner.push(IndexMargin::new(i, format!("item 4: lambda_{i}"), lambda, Some(b + s1), None));
        inner.push(IndexMargin::new(i, format!("item 5: lambda_{i}"), lambda, Some(b + min_deg_b), None));
    }
    out.push(ComparisonCertificate::from_records(TheoremId::FriedmanType, inner_label, inner, analysis.absolute(tol)));
    Ok(out)
}
