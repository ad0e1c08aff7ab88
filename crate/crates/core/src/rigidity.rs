//! Structural characterizations of the equality cases.
//!
//! Each `check_*` function evaluates the structural conditions of one
//! equality characterization and, next to them, the equality pattern actually
//! observed in the matching comparison certificate. For the biconditional
//! characterizations the two must agree; [`RigidityReport::consistent`]
//! tells whether they do.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificate::{ComparisonCertificate, TheoremId};
use crate::comparisons::Analysis;
use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;
use crate::linalg::{complement_basis, symmetric_eigen};
use crate::operators::boundary_map;

/// `w_xy = ρ_x m_x m_y` on `B × Ω`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhoFactorization {
    /// One value per boundary vertex, in boundary order.
    pub rho: Vec<f64>,
    /// `max_{(x,y) ∈ B×Ω} |w_xy - ρ_x m_x m_y|`.
    pub residual: f64,
    /// `residual ≤ tol · max w`.
    pub holds: bool,
}

impl RhoFactorization {
    pub fn is_constant(&self, tol: f64) -> bool {
        relative_spread(&self.rho) <= tol
    }

    /// `⟨ρ, 1⟩_B`.
    pub fn boundary_total(&self, graph: &WeightedBoundaryGraph) -> f64 {
        self.rho.iter().zip(graph.boundary_measure()).map(|(r, m)| r * m).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum RhoOutcome {
    Factorized(RhoFactorization),
    /// Some boundary vertex is not adjacent to some interior vertex.
    NotFactorizable { boundary: usize, interior: usize },
}

impl RhoOutcome {
    pub fn holding(&self) -> Option<&RhoFactorization> {
        match self {
            RhoOutcome::Factorized(f) if f.holds => Some(f),
            _ => None,
        }
    }
}

/// `(max - min) / max(1, |max|)`.
pub fn relative_spread(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    (max - min) / max.abs().max(1.0)
}

pub fn detect_rho_factorization(graph: &WeightedBoundaryGraph, tol: f64) -> RhoOutcome {
    let m = graph.measure();
    for &x in graph.boundary() {
        if let Some(&y) = graph.interior().iter().find(|&&y| graph.weight(x, y) <= 0.0) {
            return RhoOutcome::NotFactorizable { boundary: x, interior: y };
        }
    }
    let rho: Vec<f64> = graph
        .boundary()
        .iter()
        .map(|&x| {
            let ratios = graph.interior().iter().map(|&y| graph.weight(x, y) / (m[x] * m[y]));
            ratios.sum::<f64>() / graph.interior().len() as f64
        })
        .collect();
    let mut residual: f64 = 0.0;
    for (k, &x) in graph.boundary().iter().enumerate() {
        for &y in graph.interior() {
            residual = residual.max((graph.weight(x, y) - rho[k] * m[x] * m[y]).abs());
        }
    }
    let max_weight = graph.weights().iter().copied().fold(0.0, f64::max);
    RhoOutcome::Factorized(RhoFactorization { holds: residual <= tol * max_weight, rho, residual })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Value>,
}

impl Condition {
    fn new(name: &str, holds: bool, witness: Option<Value>) -> Self {
        Self { name: name.to_string(), holds, witness }
    }
}

/// Equality pattern of `μ_{i+|B|} ≥ λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LapDiriPattern {
    /// Strict at every index.
    NoEqualityIndices,
    /// Equality at every index except `j` (1-based).
    EqualExcept(usize),
    /// Equality at every index; impossible for a valid graph.
    AllEqual,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RigidityReport {
    pub theorem: TheoremId,
    pub conditions: Vec<Condition>,
    /// What the structural conditions predict.
    pub conclusion: bool,
    /// Whether the comparison certificate shows the characterized equality
    /// pattern, when that is meaningful for this report.
    pub observed_equality: Option<bool>,
    pub notes: Vec<(String, Value)>,
}

impl RigidityReport {
    /// The structural prediction matches the observed equality pattern.
    pub fn consistent(&self) -> bool {
        self.observed_equality.is_none_or(|o| o == self.conclusion)
    }
}

fn max_interior_eigenvalue(analysis: &Analysis<'_>) -> f64 {
    analysis.spectra.mu_interior().last().copied().unwrap_or(0.0)
}

fn observed_all_equal(cert: &ComparisonCertificate) -> bool {
    cert.all_equal_at(cert.tolerance)
}

/// Equality in `ν_i ≥ μ_i` for every `i`.
pub fn check_neumann_laplacian_rigidity(analysis: &Analysis<'_>, tol: f64) -> RigidityReport {
    let graph = analysis.graph;
    let abs = analysis.absolute(tol);
    let vol = graph.volumes();
    let mu_max = max_interior_eigenvalue(analysis);
    let mut conditions = Vec::new();
    let mut notes = Vec::new();

    let rho = detect_rho_factorization(graph, tol);
    let conclusion = match &rho {
        // ν₁ = μ₁ = 0 is the whole statement
        _ if graph.interior().len() == 1 => {
            conditions.push(Condition::new("|Omega| = 1", true, None));
            true
        }
        RhoOutcome::NotFactorizable { boundary, interior } => {
            conditions.push(Condition::new("rho_factorization", false, Some(json!({ "missing_edge": [boundary, interior] }))));
            false
        }
        RhoOutcome::Factorized(f) if !f.holds => {
            conditions.push(Condition::new("rho_factorization", false, Some(json!({ "residual": f.residual }))));
            false
        }
        RhoOutcome::Factorized(f) if f.is_constant(tol) => {
            conditions.push(Condition::new("rho_factorization", true, Some(json!({ "rho": f.rho }))));
            let rho_value = f.rho[0];
            // with a single boundary vertex there is no f ⊥ 1 on B, and only
            // μ_max(Ω) ≤ (V_Ω/V_B) Deg_b = ρ V_Ω remains
            let (name, bound) = if graph.boundary().len() == 1 {
                ("mu_max(Omega) <= rho V_Omega", rho_value * vol.interior)
            } else {
                ("mu_max(Omega) <= rho (V_Omega - V_B)", rho_value * (vol.interior - vol.boundary))
            };
            let ok = mu_max <= bound + abs;
            conditions.push(Condition::new(name, ok, Some(json!({ "mu_max": mu_max, "bound": bound }))));
            if graph.is_unit_weight() {
                let unit_bound = graph.interior().len() as f64 - graph.boundary().len() as f64;
                notes.push(("unit-weight form: mu_max(Omega) <= |Omega| - |B|".into(), json!(mu_max <= unit_bound + abs)));
            }
            if graph.is_normalized(1e-12) {
                let normalized_bound = (vol.interior - vol.boundary) / vol.interior;
                notes.push((
                    "normalized form: mu_max(Omega) <= (V_Omega - V_B)/V_Omega".into(),
                    json!(mu_max <= normalized_bound + abs),
                ));
            }
            ok
        }
        RhoOutcome::Factorized(f) => {
            conditions.push(Condition::new("rho_factorization", true, Some(json!({ "rho": f.rho }))));
            let deg_b = f.boundary_total(graph);
            let strict_rhs = vol.interior / vol.boundary * deg_b;
            let strict = strict_rhs - mu_max > abs;
            conditions.push(Condition::new(
                "mu_max(Omega) < (V_Omega/V_B) Deg_b",
                strict,
                Some(json!({ "mu_max": mu_max, "bound": strict_rhs })),
            ));
            let quadratic = strict && {
                let min_eig = rho_quadratic_form_min(graph, f, mu_max);
                conditions.push(Condition::new(
                    "quadratic form on <f,1>_B = 0 is positive semidefinite",
                    min_eig >= -abs,
                    Some(json!({ "min_eigenvalue": min_eig })),
                ));
                min_eig >= -abs
            };
            strict && quadratic
        }
    };

    let cert = analysis.compare_neumann_laplacian(tol);
    for r in cert.records.iter().filter(|r| r.index >= 2 && r.is_equal_at(cert.tolerance)) {
        if let Some(w) = neumann_laplacian_equality_witness(analysis, r.index, tol) {
            notes.push((format!("witness for index {}", r.index), json!(w.as_slice())));
        }
    }
    RigidityReport {
        theorem: TheoremId::NeuVsLap,
        conditions,
        conclusion,
        observed_equality: Some(observed_all_equal(&cert)),
        notes,
    }
}

/// Minimum of
/// `⟨ρf,f⟩_B - ((μ + Deg_b)/V_Ω)⟨f,f⟩_B - (V_G/(V_Ω Deg_b - V_B μ))⟨ρ,f⟩_B²`
/// over `⟨f,1⟩_B = 0, ⟨f,f⟩_B = 1`; `+∞` when `|B| = 1`.
pub fn rho_quadratic_form_min(graph: &WeightedBoundaryGraph, f: &RhoFactorization, mu_max: f64) -> f64 {
    let nb = graph.boundary().len();
    if nb < 2 {
        return f64::INFINITY;
    }
    let vol = graph.volumes();
    let deg_b = f.boundary_total(graph);
    let c1 = (mu_max + deg_b) / vol.interior;
    let c2 = vol.total / (vol.interior * deg_b - vol.boundary * mu_max);
    let m = graph.boundary_measure();
    // coordinates g = M^{1/2} f turn ⟨·,·⟩_B into the Euclidean product
    let sqrt_m = DVector::from_iterator(nb, m.iter().map(|v| v.sqrt()));
    let rho_sqrt_m = DVector::from_iterator(nb, f.rho.iter().zip(&m).map(|(r, v)| r * v.sqrt()));
    let form = DMatrix::from_diagonal(&DVector::from_vec(f.rho.clone()))
        - DMatrix::identity(nb, nb) * c1
        - (&rho_sqrt_m * rho_sqrt_m.transpose()) * c2;
    let basis = complement_basis(&sqrt_m);
    let reduced = basis.transpose() * form * &basis;
    symmetric_eigen(&reduced).map(|e| e.values[0]).unwrap_or(f64::NEG_INFINITY)
}

/// A function `u` on `V` with `u|_B = 0` that is simultaneously a Neumann
/// and a Laplacian eigenfunction for `ν_i = μ_i`, if one exists in the
/// `ν_i`-eigenspace. Returns the first one found.
pub fn neumann_laplacian_equality_witness(analysis: &Analysis<'_>, index: usize, tol: f64) -> Option<DVector<f64>> {
    let graph = analysis.graph;
    let nu = analysis.spectra.nu();
    let target = *nu.get(index - 1)?;
    let abs = analysis.absolute(tol);
    let cols: Vec<usize> = (0..nu.len()).filter(|&k| (nu[k] - target).abs() <= abs).collect();
    let space = DMatrix::from_fn(nu.len(), cols.len(), |r, c| analysis.spectra.neumann.eigenvectors[(r, cols[c])]);
    let (a_omega, _) = boundary_map(graph);
    // need A_Ω v = 0 inside the eigenspace: smallest eigenvector of (A V)ᵀ(A V)
    let av = &a_omega.matrix * &space;
    let eig = symmetric_eigen(&(av.transpose() * &av)).ok()?;
    if eig.values[0] > abs * abs.max(1.0) {
        return None;
    }
    let v = &space * eig.vectors.column(0);
    let mut u = DVector::zeros(graph.vertex_count());
    for (k, &y) in graph.interior().iter().enumerate() {
        u[y] = v[k];
    }
    let residual = crate::operators::apply_laplacian(graph, &u) - &u * target;
    (residual.amax() <= abs.sqrt() * u.amax()).then_some(u)
}

/// Equality on both sides of `μ_i(Ω) + min Deg_b ≤ λ_i ≤ μ_i(Ω) + max Deg_b`
/// for every `i` ⟺ `Deg_b` is constant on `Ω`.
pub fn check_dirichlet_interior_rigidity(analysis: &Analysis<'_>, tol: f64) -> RigidityReport {
    let deg_b = analysis.graph.boundary_degrees();
    let spread = relative_spread(&deg_b);
    let constant = spread <= tol;
    let cert = analysis.compare_dirichlet_interior(tol);
    RigidityReport {
        theorem: TheoremId::DiriVsInteriorTwoSided,
        conditions: vec![Condition::new("Deg_b constant on Omega", constant, Some(json!({ "Deg_b": deg_b, "spread": spread })))],
        conclusion: constant,
        observed_equality: Some(observed_all_equal(&cert)),
        notes: vec![],
    }
}

/// Boundary vertices with a number of interior neighbors other than one.
fn boundary_vertices_without_unique_neighbor(graph: &WeightedBoundaryGraph) -> Vec<usize> {
    graph
        .boundary()
        .iter()
        .copied()
        .filter(|&x| graph.interior().iter().filter(|&&y| graph.weight(x, y) > 0.0).count() != 1)
        .collect()
}

/// Equality in `ν_i ≥ μ_i(Ω)` for every `i` ⟺ every boundary vertex has
/// exactly one interior neighbor.
pub fn check_neumann_interior_rigidity(analysis: &Analysis<'_>, tol: f64) -> RigidityReport {
    let offenders = boundary_vertices_without_unique_neighbor(analysis.graph);
    let holds = offenders.is_empty();
    let cert = analysis.compare_neumann_interior(tol);
    RigidityReport {
        theorem: TheoremId::NeuVsInterior,
        conditions: vec![Condition::new(
            "each boundary vertex has exactly one interior neighbor",
            holds,
            (!holds).then(|| json!({ "offending_boundary_vertices": offenders })),
        )],
        conclusion: holds,
        observed_equality: Some(observed_all_equal(&cert)),
        notes: vec![],
    }
}

/// `Σ_{x∈B} w_xz² / (m_z Σ_{y∈Ω} w_xy)` for each `z ∈ Ω`, in interior order.
pub fn dirichlet_neumann_quantity(graph: &WeightedBoundaryGraph) -> Vec<f64> {
    let interior_weight: Vec<f64> =
        graph.boundary().iter().map(|&x| graph.interior().iter().map(|&y| graph.weight(x, y)).sum()).collect();
    graph
        .interior()
        .iter()
        .map(|&z| {
            graph
                .boundary()
                .iter()
                .zip(&interior_weight)
                .map(|(&x, &total)| graph.weight(x, z).powi(2) / (graph.measure()[z] * total))
                .sum()
        })
        .collect()
}

/// Equality on both sides of `ν_i + s₁² ≤ λ_i ≤ ν_i + s_|Ω|²` for every `i`
/// ⟺ (i) every boundary vertex has one interior neighbor and (ii) the
/// quantity of [`dirichlet_neumann_quantity`] is constant.
pub fn check_dirichlet_neumann_rigidity(analysis: &Analysis<'_>, tol: f64) -> RigidityReport {
    let graph = analysis.graph;
    let offenders = boundary_vertices_without_unique_neighbor(graph);
    let one_neighbor = offenders.is_empty();
    let quantity = dirichlet_neumann_quantity(graph);
    let spread = relative_spread(&quantity);
    let constant = spread <= tol;
    let cert = analysis.compare_dirichlet_neumann(tol);
    let singular = &analysis.spectra.singular;
    RigidityReport {
        theorem: TheoremId::DiriVsNeuTwoSided,
        conditions: vec![
            Condition::new(
                "(i) each boundary vertex has exactly one interior neighbor",
                one_neighbor,
                (!one_neighbor).then(|| json!({ "offending_boundary_vertices": offenders })),
            ),
            Condition::new("(ii) boundary quantity constant on Omega", constant, Some(json!({ "values": quantity, "spread": spread }))),
        ],
        conclusion: one_neighbor && constant,
        observed_equality: Some(observed_all_equal(&cert)),
        notes: vec![(
            "s_1^2, s_max^2".into(),
            json!([singular.smallest_squared(), singular.largest_squared()]),
        )],
    }
}

/// Classify the equality pattern of `μ_{i+|B|} ≥ λ_i`.
pub fn laplacian_dirichlet_pattern(cert: &ComparisonCertificate) -> Result<LapDiriPattern> {
    let strict: Vec<usize> = cert.records.iter().filter(|r| !r.is_equal_at(cert.tolerance)).map(|r| r.index).collect();
    if strict.len() == cert.records.len() {
        Ok(LapDiriPattern::NoEqualityIndices)
    } else if strict.is_empty() {
        Ok(LapDiriPattern::AllEqual)
    } else if let [j] = strict[..] {
        Ok(LapDiriPattern::EqualExcept(j))
    } else {
        Err(Error::EqualityPatternUnsupported(strict))
    }
}

/// For constant `ρ`, the pattern `equality except j` holds iff `G|_Ω` has `j`
/// components, `μ_{j+1}(Ω) ≥ ρ V_Ω`, and `V_Ω ≤ V_B` when `j > 1`. The volume
/// condition comes from `μ_|B| = ρ V_Ω`, so it is dropped when `|B| = 1`.
///
/// Returns `None` when `ρ` is not a constant factorization, otherwise the
/// predicted `j` (or `Some(None)` when equality-except-one is predicted to
/// fail).
pub fn predict_laplacian_dirichlet_pattern(analysis: &Analysis<'_>, tol: f64) -> Option<Option<usize>> {
    let graph = analysis.graph;
    let rho = detect_rho_factorization(graph, tol);
    let f = rho.holding().filter(|f| f.is_constant(tol))?;
    let vol = graph.volumes();
    let j = graph.interior_component_count();
    let mu_o = analysis.spectra.mu_interior();
    let abs = analysis.absolute(tol);
    let gap_ok = mu_o.get(j).is_none_or(|&mu| mu >= f.rho[0] * vol.interior - abs);
    let volume_ok = j <= 1 || graph.boundary().len() == 1 || vol.interior <= vol.boundary + tol * vol.total;
    Some((gap_ok && volume_ok).then_some(j))
}

/// Structure forced by equality in `μ_{i+|B|} ≥ λ_i` at all indices but one.
pub fn check_laplacian_dirichlet_rigidity(analysis: &Analysis<'_>, tol: f64) -> Result<RigidityReport> {
    let graph = analysis.graph;
    let cert = analysis.compare_laplacian_dirichlet(tol);
    let pattern = laplacian_dirichlet_pattern(&cert)?;
    let abs = analysis.absolute(tol);
    let mut notes = vec![("pattern".to_string(), json!(pattern))];
    if let Some(prediction) = predict_laplacian_dirichlet_pattern(analysis, tol) {
        notes.push(("predicted_except_index (constant rho)".into(), json!(prediction)));
    }

    let j = match pattern {
        LapDiriPattern::NoEqualityIndices => {
            return Ok(RigidityReport {
                theorem: TheoremId::LapVsDiri,
                conditions: vec![],
                conclusion: true,
                observed_equality: None,
                notes,
            })
        }
        LapDiriPattern::AllEqual => {
            return Ok(RigidityReport {
                theorem: TheoremId::LapVsDiri,
                conditions: vec![Condition::new("equality fails somewhere", false, None)],
                conclusion: false,
                observed_equality: Some(true),
                notes,
            })
        }
        LapDiriPattern::EqualExcept(j) => j,
    };

    let mut conditions = Vec::new();
    let components = graph.interior_component_count();
    conditions.push(Condition::new("interior has j components", components == j, Some(json!({ "components": components, "j": j }))));
    let rho = detect_rho_factorization(graph, tol);
    match rho.holding() {
        None => conditions.push(Condition::new("rho_factorization", false, Some(json!(rho)))),
        Some(f) => {
            conditions.push(Condition::new("rho_factorization", true, Some(json!({ "rho": f.rho }))));
            let total = f.boundary_total(graph);
            let lambda = &analysis.spectra.lambda()[..j];
            let flat = lambda.iter().all(|l| (l - total).abs() <= abs);
            conditions.push(Condition::new(
                "lambda_1 = ... = lambda_j = <rho,1>_B",
                flat,
                Some(json!({ "lambda": lambda, "rho_total": total })),
            ));
            if f.is_constant(tol) {
                let vol = graph.volumes();
                let mu_o = analysis.spectra.mu_interior();
                let threshold = f.rho[0] * vol.interior;
                let gap = mu_o.get(j).is_none_or(|&mu| mu >= threshold - abs);
                conditions.push(Condition::new(
                    "mu_{j+1}(Omega) >= rho V_Omega",
                    gap,
                    Some(json!({ "mu_j+1": mu_o.get(j), "threshold": threshold })),
                ));
                let volume = j <= 1 || graph.boundary().len() == 1 || vol.interior <= vol.boundary + tol * vol.total;
                conditions.push(Condition::new(
                    "V_Omega <= V_B when j > 1 and |B| > 1",
                    volume,
                    Some(json!({ "V_Omega": vol.interior, "V_B": vol.boundary })),
                ));
            }
        }
    }
    let conclusion = conditions.iter().all(|c| c.holds);
    Ok(RigidityReport { theorem: TheoremId::LapVsDiri, conditions, conclusion, observed_equality: Some(true), notes })
}

/// Strict index of `μ_{i+|B|} ≥ λ_i` when it is unique.
fn single_strict_index(cert: &ComparisonCertificate) -> Option<usize> {
    let strict: Vec<usize> = cert.records.iter().filter(|r| !r.is_equal_at(cert.tolerance)).map(|r| r.index).collect();
    match strict[..] {
        [j] => Some(j),
        _ => None,
    }
}

fn is_complete_bipartite_boundary(graph: &WeightedBoundaryGraph) -> bool {
    let all_cross = graph.boundary().iter().all(|&x| graph.interior().iter().all(|&y| graph.weight(x, y) > 0.0));
    all_cross && graph.interior_subgraph().edges().is_empty()
}

fn observed_j_note(strict: Option<usize>, expected: &[usize]) -> Vec<(String, Value)> {
    match strict {
        Some(j) => vec![("observed j".into(), json!(j)), ("observed j matches a case".into(), json!(expected.contains(&j)))],
        None => vec![],
    }
}

/// Unit weight: equality except `j` ⟺ `j = |Ω|` and `G = K_{B,Ω}` with
/// `|Ω| ≤ |B|`, or one of two cases that the constant-`ρ` characterization
/// also admits: `G = K_{B,Ω}` with `|B| = 1` (`j = |Ω|`), or `G|_Ω` complete
/// on at least two vertices and joined to all of `B` (`j = 1`, since
/// `μ₂(K_k) = k`).
pub fn check_corollary_unit_weight(analysis: &Analysis<'_>, tol: f64) -> Result<RigidityReport> {
    let graph = analysis.graph;
    if !graph.is_unit_weight() {
        return Err(Error::NotUnitWeight("measures and edge weights must all equal 1".into()));
    }
    let (nb, no) = (graph.boundary().len(), graph.interior().len());
    let bipartite = is_complete_bipartite_boundary(graph);
    let case_bipartite = bipartite && no <= nb;
    let case_single = bipartite && nb == 1;
    let case_complete = no >= 2 && boundary_joined_to_all(graph) && interior_is_complete(graph);
    let cert = analysis.compare_laplacian_dirichlet(tol);
    let strict = single_strict_index(&cert);
    let mut expected = Vec::new();
    if case_bipartite || case_single {
        expected.push(no);
    }
    if case_complete {
        expected.push(1);
    }
    let mut notes = vec![("corollary".into(), json!("unit weight"))];
    notes.extend(observed_j_note(strict, &expected));
    Ok(RigidityReport {
        theorem: TheoremId::LapVsDiri,
        conditions: vec![
            Condition::new("G = K_{B,Omega} with |Omega| <= |B|", case_bipartite, Some(json!({ "Omega": no, "B": nb }))),
            Condition::new("G = K_{B,Omega} with |B| = 1", case_single, None),
            Condition::new("G|_Omega complete, |Omega| >= 2, every boundary vertex joined to all of Omega", case_complete, None),
        ],
        conclusion: case_bipartite || case_single || case_complete,
        observed_equality: Some(strict.is_some()),
        notes,
    })
}

fn boundary_joined_to_all(graph: &WeightedBoundaryGraph) -> bool {
    graph.boundary().iter().all(|&x| graph.interior().iter().all(|&y| graph.weight(x, y) > 0.0))
}

fn interior_is_complete(graph: &WeightedBoundaryGraph) -> bool {
    let o = graph.interior();
    o.iter().enumerate().all(|(k, &a)| o[k + 1..].iter().all(|&b| graph.weight(a, b) > 0.0))
}

/// Normalized weight: equality except `j` ⟺ either `j = |Ω|`, `G = K_{B,Ω}`,
/// `V_Ω = V_B`, `w_xy = m_x m_y / V_Ω`; or `j = 1`, `V_Ω ≥ V_B`,
/// `w_xy = m_x m_y / V_Ω`, `G|_Ω` complete with `μ₂(Ω) ≥ 1` and
/// `Deg_Ω ≡ 1 - V_B/V_Ω`. With `|B| = 1` the constant-`ρ` characterization
/// drops its volume condition, which admits `w_xy = m_x m_y / V_Ω` with
/// `μ_{j+1}(Ω) ≥ 1` for any number `j` of interior components.
pub fn check_corollary_normalized(analysis: &Analysis<'_>, tol: f64) -> Result<RigidityReport> {
    let graph = analysis.graph;
    if !graph.is_normalized(1e-12) {
        return Err(Error::NotNormalized("Deg(x) must equal 1 at every vertex".into()));
    }
    let vol = graph.volumes();
    let m = graph.measure();
    let abs = analysis.absolute(tol);
    let close = |a: f64, b: f64| (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0);
    let product_weights = boundary_joined_to_all(graph)
        && graph.boundary().iter().all(|&x| graph.interior().iter().all(|&y| close(graph.weight(x, y), m[x] * m[y] / vol.interior)));

    let case_one = is_complete_bipartite_boundary(graph) && close(vol.interior, vol.boundary) && product_weights;

    let no = graph.interior().len();
    let mu_o = analysis.spectra.mu_interior();
    let mu2_ok = mu_o.get(1).is_none_or(|&mu2| mu2 >= 1.0 - abs);
    let target_degree = 1.0 - vol.boundary / vol.interior;
    let degree_ok = graph.interior().iter().all(|&y| close(graph.interior_degree(y).expect("interior"), target_degree));
    let case_two =
        vol.interior >= vol.boundary - tol * vol.total && product_weights && interior_is_complete(graph) && mu2_ok && degree_ok;

    let j = graph.interior_component_count();
    let case_single = graph.boundary().len() == 1 && product_weights && mu_o.get(j).is_none_or(|&mu| mu >= 1.0 - abs);

    let cert = analysis.compare_laplacian_dirichlet(tol);
    let strict = single_strict_index(&cert);
    let mut expected = Vec::new();
    if case_one {
        expected.push(no);
    }
    if case_two {
        expected.push(1);
    }
    if case_single {
        expected.push(j);
    }
    let mut notes = vec![("corollary".into(), json!("normalized weight"))];
    notes.extend(observed_j_note(strict, &expected));
    Ok(RigidityReport {
        theorem: TheoremId::LapVsDiri,
        conclusion: case_one || case_two || case_single,
        observed_equality: Some(strict.is_some()),
        conditions: vec![
            Condition::new("case j = |Omega|: K_{B,Omega}, V_Omega = V_B, w = m m / V_Omega", case_one, None),
            Condition::new(
                "case j = 1: V_Omega >= V_B, w = m m / V_Omega, complete interior, mu_2(Omega) >= 1, Deg_Omega = 1 - V_B/V_Omega",
                case_two,
                None,
            ),
            Condition::new("case |B| = 1: w = m m / V_Omega, mu_{j+1}(Omega) >= 1", case_single, None),
        ],
        notes,
    })
}
