//! `bspec`: spectra and certified eigenvalue comparisons for weighted graphs
//! with boundary.
//!
//! Exit codes: 0 success or every certificate holds, 1 usage error,
//! 2 a certificate fails or a rigidity conclusion is false, 3 not applicable
//! or unsupported equality pattern, 4 invalid graph file.

mod audit;
mod report;
mod table;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use boundary_spectra::combinatorial::{fiedler_bounds, friedman_bounds};
use boundary_spectra::curvature::{bakry_emery_curvature, certify_lichnerowicz, ollivier_curvatures, LichnerowiczVariant};
use boundary_spectra::operators::{dirichlet_laplacian, full_laplacian, interior_laplacian, neumann_laplacian, OperatorLabel};
use boundary_spectra::rigidity::{
    check_corollary_normalized, check_corollary_unit_weight, check_dirichlet_interior_rigidity,
    check_dirichlet_neumann_rigidity, check_laplacian_dirichlet_rigidity, check_neumann_interior_rigidity,
    check_neumann_laplacian_rigidity,
};
use boundary_spectra::{
    parse_graph_bytes, Analysis, ComparisonCertificate, Dimension, Error, TheoremId, Verdict, WeightedBoundaryGraph,
    CROSS_CHECK_TOLERANCE, DEFAULT_TOLERANCE,
};
use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use report::{GraphSummary, ResultItem, RunReport, ValidationError};

const EXIT_FAILS: u8 = 2;
const EXIT_NOT_APPLICABLE: u8 = 3;
const EXIT_INVALID_GRAPH: u8 = 4;

#[derive(Parser)]
#[command(name = "bspec", version, about = "Spectra and certified eigenvalue comparisons on weighted graphs with boundary")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (JSON: vertices with measures, weighted edges, boundary list).
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
}

#[derive(Args)]
struct Output {
    /// Emit the JSON report (default).
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Emit a human-readable table instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file against the axioms of a graph with boundary.
    Validate {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        output: Output,
    },
    /// Eigenvalues of -Δ, -Δ^D, -Δ^N, -Δ_Ω and the singular values of Deg^-1/2 A_Ω.
    Spectrum {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate eigenvalue comparison certificates.
    Compare {
        #[command(flatten)]
        graph: GraphArg,
        /// `all` (the five comparisons) or a comma-separated list of theorem names.
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Relative tolerance; scaled by max(1, largest eigenvalue).
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tol: f64,
        /// Dimension n for Bakry-Émery certificates: a number > 1 or `inf`.
        #[arg(long, default_value = "inf")]
        n: Dimension,
        #[command(flatten)]
        output: Output,
    },
    /// Test a rigidity characterization: do the structural conditions predict equality?
    Certify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        theorem: RigidityTheorem,
        /// Relative tolerance for equality and structural conditions.
        #[arg(long, default_value_t = CROSS_CHECK_TOLERANCE, value_parser = parse_tolerance)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Bakry-Émery or Ollivier curvature and the matching Lichnerowicz-type certificates.
    Curvature {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        kind: CurvatureArg,
        /// Dimension n of CD(K, n): a number > 1 or `inf`. Ignored for Ollivier.
        #[arg(long, default_value = "inf")]
        n: Dimension,
        /// Compute curvature on the whole graph or on the interior subgraph.
        #[arg(long, value_enum, default_value_t = OnArg::G)]
        on: OnArg,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Fiedler-type and Friedman-type lower bounds (unit-weight graphs).
    Bounds {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = FamilyArg::All)]
        family: FamilyArg,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Generate seeded random graphs and run every certificate on each.
    RandomAudit {
        /// Number of graphs.
        #[arg(long, default_value_t = 200)]
        n: u64,
        /// Maximum vertex count per graph.
        #[arg(long = "max-v", default_value_t = 12, value_parser = clap::value_parser!(usize))]
        max_v: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Print an operator as a row-major matrix together with its measure.
    DumpOperator {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        operator: OperatorArg,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RigidityTheorem {
    /// ν_i = μ_i for all i
    NeuLap,
    /// λ_i = μ_i(Ω) + c for all i
    DiriInterior,
    /// ν_i = μ_i(Ω) for all i
    NeuInterior,
    /// λ_i = ν_i + c for all i
    DiriNeu,
    /// μ_{i+|B|} = λ_i except at one index j
    LapDiri,
    /// unit-weight specialization of lap-diri
    CorollaryUnit,
    /// normalized-weight specialization of lap-diri
    CorollaryNormalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurvatureArg {
    Be,
    Ollivier,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnArg {
    G,
    Interior,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fiedler,
    Friedman,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorArg {
    Full,
    Interior,
    Dirichlet,
    Neumann,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("tolerance must be a finite number >= 0, got '{s}'")),
    }
}

fn theorem_help() -> String {
    let mut out = String::from("Certificates and the theorems they check:\n");
    for t in TheoremId::ALL {
        out.push_str(&format!("  {:<22} {}\n", t.as_str(), t.statement()));
    }
    out.push_str("\nExit codes: 0 holds, 1 usage error, 2 fails or conclusion false, 3 not applicable, 4 invalid graph file.");
    out
}

/// A command that could not produce a report.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Validation(_) | Error::Format(_) | Error::Json(_) => EXIT_INVALID_GRAPH,
            Error::NotUnitWeight(_)
            | Error::NotNormalized(_)
            | Error::EqualityPatternUnsupported(_)
            | Error::DegenerateGamma(_)
            | Error::NotInterior(_) => EXIT_NOT_APPLICABLE,
            Error::InvalidArgument(_) => 1,
            _ => EXIT_FAILS,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::from_error(e)
    }
}

struct Loaded {
    bytes: Vec<u8>,
    graph: WeightedBoundaryGraph,
}

fn read(arg: &GraphArg) -> Result<Vec<u8>, Failure> {
    fs::read(&arg.graph).map_err(|e| Failure { code: EXIT_INVALID_GRAPH, message: format!("{}: {e}", arg.graph.display()) })
}

fn load(arg: &GraphArg) -> Result<Loaded, Failure> {
    let bytes = read(arg)?;
    let graph = parse_graph_bytes(&bytes)?;
    graph.validate().map_err(Error::from)?;
    Ok(Loaded { bytes, graph })
}

/// 2 if any certificate fails, else 3 if none applies, else 0.
fn certificates_code(certs: &[ComparisonCertificate]) -> u8 {
    if certs.iter().any(ComparisonCertificate::fails) {
        EXIT_FAILS
    } else if !certs.is_empty() && certs.iter().all(|c| matches!(c.verdict, Verdict::NotApplicable(_))) {
        EXIT_NOT_APPLICABLE
    } else {
        0
    }
}

fn summary(graph: &WeightedBoundaryGraph) -> GraphSummary {
    GraphSummary {
        vertices: graph.vertex_count(),
        edges: graph.edges().len(),
        boundary: graph.boundary().to_vec(),
        interior: graph.interior().to_vec(),
        unit_weight: graph.is_unit_weight(),
        normalized: graph.is_normalized(1e-9),
    }
}

fn selected_theorems(list: &str) -> Result<Vec<TheoremId>, Failure> {
    if list == "all" {
        return Ok(TheoremId::COMPARISONS.to_vec());
    }
    list.split(',')
        .map(|s| s.trim().parse::<TheoremId>().map_err(|message| Failure { code: 1, message }))
        .collect()
}

fn theorem_certificates(analysis: &Analysis<'_>, theorem: TheoremId, tol: f64, n: Dimension) -> Result<Vec<ComparisonCertificate>, Failure> {
    if let Some(cert) = analysis.compare(theorem, tol) {
        return Ok(vec![cert]);
    }
    let unit = analysis.graph.is_unit_weight();
    let not_unit = || vec![ComparisonCertificate::not_applicable(theorem, None, "graph is not unit-weight")];
    Ok(match theorem {
        TheoremId::LichnerowiczBE | TheoremId::LichnerowiczOllivier => {
            let be = theorem == TheoremId::LichnerowiczBE;
            let variants = LichnerowiczVariant::ALL.into_iter().filter(|v| {
                matches!(
                    v,
                    LichnerowiczVariant::BakryEmeryGraphNeumann
                        | LichnerowiczVariant::BakryEmeryInterior
                        | LichnerowiczVariant::BakryEmeryGraphDirichlet
                ) == be
            });
            variants.map(|v| certify_lichnerowicz(analysis, v, n, tol)).collect::<boundary_spectra::Result<_>>()?
        }
        TheoremId::FiedlerType if unit => vec![fiedler_bounds(analysis, tol)?],
        TheoremId::FriedmanType if unit => friedman_bounds(analysis, tol)?,
        _ => not_unit(),
    })
}

fn lichnerowicz_variants(kind: CurvatureArg, on: OnArg) -> &'static [LichnerowiczVariant] {
    use LichnerowiczVariant::*;
    match (kind, on) {
        (CurvatureArg::Be, OnArg::G) => &[BakryEmeryGraphNeumann, BakryEmeryGraphDirichlet],
        (CurvatureArg::Be, OnArg::Interior) => &[BakryEmeryInterior],
        (CurvatureArg::Ollivier, OnArg::G) => &[OllivierGraphNeumann, OllivierGraphDirichlet],
        (CurvatureArg::Ollivier, OnArg::Interior) => &[OllivierInterior],
    }
}

fn run(command: &Command, argv: &[String]) -> Result<(RunReport, u8), Failure> {
    match command {
        Command::Validate { graph, .. } => {
            let bytes = read(graph)?;
            let mut report = RunReport::new(argv, Some(&bytes), None);
            let outcome = parse_graph_bytes(&bytes).and_then(|g| g.validate().map(|_| g).map_err(Error::from));
            let code = match outcome {
                Ok(g) => {
                    report.results.push(ResultItem::Valid(summary(&g)));
                    0
                }
                Err(e) => {
                    let (kind, vertices) = match &e {
                        Error::Validation(v) => (Some(v.kind), v.vertices.clone()),
                        _ => (None, Vec::new()),
                    };
                    report.results.push(ResultItem::Invalid(ValidationError { error: e.to_string(), axiom: kind, vertices }));
                    EXIT_INVALID_GRAPH
                }
            };
            Ok((report, code))
        }
        Command::Spectrum { graph, .. } => {
            let loaded = load(graph)?;
            let analysis = Analysis::new(&loaded.graph)?;
            let mut report = RunReport::new(argv, Some(&loaded.bytes), None);
            let s = &analysis.spectra;
            for (operator, spectrum) in [
                (OperatorLabel::FullLaplacian, &s.laplacian),
                (OperatorLabel::DirichletLaplacian, &s.dirichlet),
                (OperatorLabel::NeumannLaplacian, &s.neumann),
                (OperatorLabel::InteriorLaplacian, &s.interior),
            ] {
                report.results.push(ResultItem::Spectrum { operator, eigenvalues: spectrum.eigenvalues.clone() });
            }
            report.results.push(ResultItem::SingularValues { singular_values: s.singular.singular_values.clone() });
            Ok((report, 0))
        }
        Command::Compare { graph, theorems, tol, n, .. } => {
            let theorems = selected_theorems(theorems)?;
            let loaded = load(graph)?;
            let analysis = Analysis::new(&loaded.graph)?;
            let mut certs = Vec::new();
            for t in theorems {
                certs.extend(theorem_certificates(&analysis, t, *tol, *n)?);
            }
            let code = certificates_code(&certs);
            let mut report = RunReport::new(argv, Some(&loaded.bytes), None);
            report.results.extend(certs.into_iter().map(ResultItem::Certificate));
            Ok((report, code))
        }
        Command::Certify { graph, theorem, tol, .. } => {
            let loaded = load(graph)?;
            let analysis = Analysis::new(&loaded.graph)?;
            let rigidity = match theorem {
                RigidityTheorem::NeuLap => check_neumann_laplacian_rigidity(&analysis, *tol),
                RigidityTheorem::DiriInterior => check_dirichlet_interior_rigidity(&analysis, *tol),
                RigidityTheorem::NeuInterior => check_neumann_interior_rigidity(&analysis, *tol),
                RigidityTheorem::DiriNeu => check_dirichlet_neumann_rigidity(&analysis, *tol),
                RigidityTheorem::LapDiri => check_laplacian_dirichlet_rigidity(&analysis, *tol)?,
                RigidityTheorem::CorollaryUnit => check_corollary_unit_weight(&analysis, *tol)?,
                RigidityTheorem::CorollaryNormalized => check_corollary_normalized(&analysis, *tol)?,
            };
            let mut report = RunReport::new(argv, Some(&loaded.bytes), None);
            if let Some(cert) = analysis.compare(rigidity.theorem, *tol) {
                report.results.push(ResultItem::Certificate(cert));
            }
            let code = if rigidity.conclusion { 0 } else { EXIT_FAILS };
            report.results.push(ResultItem::Rigidity(rigidity));
            Ok((report, code))
        }
        Command::Curvature { graph, kind, n, on, tol, .. } => {
            let loaded = load(graph)?;
            let analysis = Analysis::new(&loaded.graph)?;
            let interior;
            let (target, label) = match on {
                OnArg::G => (&loaded.graph, "g"),
                OnArg::Interior => {
                    interior = loaded.graph.interior_subgraph();
                    (&interior, "interior")
                }
            };
            let result = match kind {
                CurvatureArg::Be => bakry_emery_curvature(target, *n)?,
                CurvatureArg::Ollivier => ollivier_curvatures(target)?,
            };
            let certs = lichnerowicz_variants(*kind, *on)
                .iter()
                .map(|&v| certify_lichnerowicz(&analysis, v, *n, *tol))
                .collect::<boundary_spectra::Result<Vec<_>>>()?;
            let code = certificates_code(&certs);
            let mut report = RunReport::new(argv, Some(&loaded.bytes), None);
            report.results.push(ResultItem::Curvature { on: label, result });
            report.results.extend(certs.into_iter().map(ResultItem::Certificate));
            Ok((report, code))
        }
        Command::Bounds { graph, family, tol, .. } => {
            let loaded = load(graph)?;
            let analysis = Analysis::new(&loaded.graph)?;
            let mut certs = Vec::new();
            if matches!(family, FamilyArg::Fiedler | FamilyArg::All) {
                certs.push(fiedler_bounds(&analysis, *tol)?);
            }
            if matches!(family, FamilyArg::Friedman | FamilyArg::All) {
                certs.extend(friedman_bounds(&analysis, *tol)?);
            }
            let code = certificates_code(&certs);
            let mut report = RunReport::new(argv, Some(&loaded.bytes), None);
            report.results.extend(certs.into_iter().map(ResultItem::Certificate));
            Ok((report, code))
        }
        Command::RandomAudit { n, max_v, seed, tol, .. } => {
            let summary = audit::random_audit(*seed, *n, *max_v, *tol)?;
            let code = if summary.failure_count == 0 && summary.rigidity_inconsistencies.is_empty() { 0 } else { EXIT_FAILS };
            let mut report = RunReport::new(argv, None, Some(*seed));
            report.results.push(ResultItem::Audit(summary));
            Ok((report, code))
        }
        Command::DumpOperator { graph, operator, .. } => {
            let loaded = load(graph)?;
            let g = &loaded.graph;
            let (op, order) = match operator {
                OperatorArg::Full => (full_laplacian(g), (0..g.vertex_count()).collect()),
                OperatorArg::Interior => (interior_laplacian(g), g.interior().to_vec()),
                OperatorArg::Dirichlet => (dirichlet_laplacian(g), g.interior().to_vec()),
                OperatorArg::Neumann => (neumann_laplacian(g), g.interior().to_vec()),
            };
            let rows = op.matrix.row_iter().map(|r| r.iter().copied().collect()).collect();
            let mut report = RunReport::new(argv, Some(&loaded.bytes), None);
            report.results.push(ResultItem::Operator { operator: op.label, order, measure: op.measure, rows });
            Ok((report, 0))
        }
    }
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Validate { output, .. }
        | Command::Spectrum { output, .. }
        | Command::Compare { output, .. }
        | Command::Certify { output, .. }
        | Command::Curvature { output, .. }
        | Command::Bounds { output, .. }
        | Command::RandomAudit { output, .. }
        | Command::DumpOperator { output, .. } => output,
    }
}

fn parse_cli(argv: &[String]) -> Result<Cli, clap::Error> {
    let help = theorem_help();
    let command = Cli::command()
        .after_help(help.clone())
        .mut_subcommand("compare", |c| c.after_help(help.clone()))
        .mut_subcommand("certify", |c| c.after_help(help.clone()))
        .mut_subcommand("curvature", |c| c.after_help(help.clone()))
        .mut_subcommand("bounds", |c| c.after_help(help.clone()))
        .mut_subcommand("random-audit", |c| c.after_help(help.clone()));
    let matches = command.try_get_matches_from(argv)?;
    Cli::from_arg_matches(&matches)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match parse_cli(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli.command, &argv) {
        Ok((report, code)) => {
            if output_of(&cli.command).table {
                print!("{}", table::render(&report));
            } else {
                println!("{}", report.to_json());
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
