//! The five eigenvalue comparison inequalities, as certificates.
//!
//! Tolerances passed in are relative: the absolute tolerance is
//! `tol * max(1, largest eigenvalue of the four operators)`.

use crate::certificate::{ComparisonCertificate, IndexMargin, TheoremId, Verdict};
use crate::combinatorial::{fiedler_bounds, friedman_bounds};
use crate::curvature::{certify_lichnerowicz, Dimension, LichnerowiczVariant};
use crate::error::Result;
use crate::graph::WeightedBoundaryGraph;
use crate::spectra::GraphSpectra;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Looser tolerance used when comparing equality patterns with rigidity
/// conditions.
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-7;

/// A validated graph together with all of its spectra.
#[derive(Debug, Clone)]
pub struct Analysis<'g> {
    pub graph: &'g WeightedBoundaryGraph,
    pub spectra: GraphSpectra,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g WeightedBoundaryGraph) -> Result<Self> {
        graph.validate()?;
        Ok(Self { graph, spectra: GraphSpectra::compute(graph)? })
    }

    /// Absolute tolerance for a relative one.
    pub fn absolute(&self, tol: f64) -> f64 {
        tol * self.spectra.scale()
    }

    fn min_max_boundary_degree(&self) -> (f64, f64) {
        let d = self.graph.boundary_degrees();
        let min = d.iter().copied().fold(f64::INFINITY, f64::min);
        let max = d.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (min, max)
    }

    pub fn compare_neumann_laplacian(&self, tol: f64) -> ComparisonCertificate {
        let (nu, mu) = (self.spectra.nu(), self.spectra.mu());
        let records = (0..nu.len())
            .map(|i| IndexMargin::new(i + 1, format!("nu_{}", i + 1), nu[i], Some(mu[i]), None))
            .collect();
        ComparisonCertificate::from_records(TheoremId::NeuVsLap, None, records, self.absolute(tol))
    }

    pub fn compare_dirichlet_interior(&self, tol: f64) -> ComparisonCertificate {
        let (lambda, mu_o) = (self.spectra.lambda(), self.spectra.mu_interior());
        let (lo, hi) = self.min_max_boundary_degree();
        let records = (0..lambda.len())
            .map(|i| IndexMargin::new(i + 1, format!("lambda_{}", i + 1), lambda[i], Some(mu_o[i] + lo), Some(mu_o[i] + hi)))
            .collect();
        ComparisonCertificate::from_records(TheoremId::DiriVsInteriorTwoSided, None, records, self.absolute(tol))
    }

    pub fn compare_neumann_interior(&self, tol: f64) -> ComparisonCertificate {
        let (nu, mu_o) = (self.spectra.nu(), self.spectra.mu_interior());
        let records = (0..nu.len())
            .map(|i| IndexMargin::new(i + 1, format!("nu_{}", i + 1), nu[i], Some(mu_o[i]), None))
            .collect();
        ComparisonCertificate::from_records(TheoremId::NeuVsInterior, None, records, self.absolute(tol))
    }

    pub fn compare_dirichlet_neumann(&self, tol: f64) -> ComparisonCertificate {
        let (lambda, nu) = (self.spectra.lambda(), self.spectra.nu());
        let (s_lo, s_hi) = (self.spectra.singular.smallest_squared(), self.spectra.singular.largest_squared());
        let records = (0..lambda.len())
            .map(|i| IndexMargin::new(i + 1, format!("lambda_{}", i + 1), lambda[i], Some(nu[i] + s_lo), Some(nu[i] + s_hi)))
            .collect();
        ComparisonCertificate::from_records(TheoremId::DiriVsNeuTwoSided, None, records, self.absolute(tol))
    }

    /// `μ_{i+|B|} ≥ λ_i`. Equality at every index contradicts the theorem and
    /// is reported as a failure at every index.
    pub fn compare_laplacian_dirichlet(&self, tol: f64) -> ComparisonCertificate {
        let (lambda, mu) = (self.spectra.lambda(), self.spectra.mu());
        let shift = self.graph.boundary().len();
        let records = (0..lambda.len())
            .map(|i| IndexMargin::new(i + 1, format!("lambda_{}", i + 1), lambda[i], None, Some(mu[i + shift])))
            .collect();
        let mut cert = ComparisonCertificate::from_records(TheoremId::LapVsDiri, None, records, self.absolute(tol));
        if cert.holds() && cert.all_equal_at(cert.tolerance) {
            cert.verdict = Verdict::FailsAt(cert.records.iter().map(|r| r.index).collect());
        }
        cert
    }

    pub fn compare(&self, theorem: TheoremId, tol: f64) -> Option<ComparisonCertificate> {
        Some(match theorem {
            TheoremId::NeuVsLap => self.compare_neumann_laplacian(tol),
            TheoremId::DiriVsInteriorTwoSided => self.compare_dirichlet_interior(tol),
            TheoremId::NeuVsInterior => self.compare_neumann_interior(tol),
            TheoremId::DiriVsNeuTwoSided => self.compare_dirichlet_neumann(tol),
            TheoremId::LapVsDiri => self.compare_laplacian_dirichlet(tol),
            _ => return None,
        })
    }

    pub fn comparisons(&self, tol: f64) -> Vec<ComparisonCertificate> {
        TheoremId::COMPARISONS.iter().filter_map(|&t| self.compare(t, tol)).collect()
    }
}

/// Extra certificate families for [`run_all`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Lichnerowicz-type certificates with this Bakry-Émery dimension.
    pub curvature: Option<Dimension>,
    /// Fiedler- and Friedman-type certificates (unit-weight graphs only;
    /// skipped otherwise).
    pub combinatorial: bool,
}

/// The five comparison certificates, followed by the curvature and
/// combinatorial ones requested in `options`.
pub fn run_all(graph: &WeightedBoundaryGraph, tol: f64, options: RunOptions) -> Result<Vec<ComparisonCertificate>> {
    let analysis = Analysis::new(graph)?;
    let mut out = analysis.comparisons(tol);
    if let Some(n) = options.curvature {
        for variant in LichnerowiczVariant::ALL {
            out.push(certify_lichnerowicz(&analysis, variant, n, tol)?);
        }
    }
    if options.combinatorial && graph.is_unit_weight() {
        out.push(fiedler_bounds(&analysis, tol)?);
        out.extend(friedman_bounds(&analysis, tol)?);
    }
    Ok(out)
}
