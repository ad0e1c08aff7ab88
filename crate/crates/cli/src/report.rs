//! JSON report envelope shared by every subcommand.

use boundary_spectra::curvature::CurvatureResult;
use boundary_spectra::generate::WeightModel;
use boundary_spectra::operators::OperatorLabel;
use boundary_spectra::rigidity::RigidityReport;
use boundary_spectra::{ComparisonCertificate, TheoremId, ValidationKind};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Invocation {
    pub subcommand: String,
    pub flags: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool_version: &'static str,
    pub invocation: Invocation,
    /// SHA-256 of the input file bytes, lowercase hex.
    pub graph_digest: Option<String>,
    pub seed: Option<u64>,
    pub results: Vec<ResultItem>,
}

impl RunReport {
    pub fn new(argv: &[String], graph_bytes: Option<&[u8]>, seed: Option<u64>) -> Self {
        let mut rest = argv.iter().skip(1).cloned();
        let subcommand = rest.next().unwrap_or_default();
        Self {
            tool_version: env!("CARGO_PKG_VERSION"),
            invocation: Invocation { subcommand, flags: rest.collect() },
            graph_digest: graph_bytes.map(digest),
            seed,
            results: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub boundary: Vec<usize>,
    pub interior: Vec<usize>,
    pub unit_weight: bool,
    pub normalized: bool,
}

#[derive(Debug, Serialize)]
pub struct ValidationError {
    pub error: String,
    pub axiom: Option<ValidationKind>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct AuditFailure {
    pub index: u64,
    pub model: WeightModel,
    pub theorem: TheoremId,
    pub variant: Option<String>,
    pub min_margin: f64,
}

#[derive(Debug, Default, Serialize)]
pub struct ModelCounts {
    pub unit: usize,
    pub normalized: usize,
    pub lognormal: usize,
}

#[derive(Debug, Serialize)]
pub struct AuditSummary {
    pub instances: u64,
    pub max_vertices: usize,
    pub tolerance: f64,
    pub models: ModelCounts,
    pub certificates: usize,
    pub not_applicable: usize,
    pub failure_count: usize,
    pub failures: Vec<AuditFailure>,
    /// Instances whose rigidity prediction disagreed with the observed
    /// equality pattern.
    pub rigidity_inconsistencies: Vec<u64>,
    /// Smallest certificate margin divided by `max(1, spectral radius)`.
    pub worst_relative_margin: f64,
}

/// One entry of `results`, tagged by `kind`.
#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultItem {
    Valid(GraphSummary),
    Invalid(ValidationError),
    Spectrum { operator: OperatorLabel, eigenvalues: Vec<f64> },
    SingularValues { singular_values: Vec<f64> },
    Certificate(ComparisonCertificate),
    Rigidity(RigidityReport),
    Curvature { on: &'static str, result: CurvatureResult },
    Operator { operator: OperatorLabel, order: Vec<usize>, measure: Vec<f64>, rows: Vec<Vec<f64>> },
    Audit(AuditSummary),
}
