//! Spectra of weighted graphs with boundary.
//!
//! A graph with boundary is a connected weighted graph `(G, m, w)` together
//! with an independent set `B` of boundary vertices, each adjacent to the
//! interior `Ω = V \ B`. This crate builds the full, Dirichlet, Neumann and
//! interior Laplacians of such a graph, computes their spectra, and checks
//! the eigenvalue comparison inequalities between them, reporting per-index
//! margins, equality indices and the structural conditions that force
//! equality. Curvature (Bakry-Émery and Ollivier) and edge-connectivity
//! lower bounds are provided for the associated first-eigenvalue estimates.
//!
//! ```
//! use boundary_spectra::{Analysis, WeightedBoundaryGraph, DEFAULT_TOLERANCE};
//!
//! let p3 = WeightedBoundaryGraph::unit(3, &[(0, 1), (1, 2)], &[0, 2]).unwrap();
//! let analysis = Analysis::new(&p3).unwrap();
//! assert!((analysis.spectra.lambda()[0] - 2.0).abs() < 1e-12);
//! assert!(analysis.comparisons(DEFAULT_TOLERANCE).iter().all(|c| c.holds()));
//! ```

pub mod certificate;
pub mod combinatorial;
pub mod comparisons;
pub mod curvature;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod lp;
pub mod operators;
pub mod rigidity;
pub mod spectra;

pub use certificate::{ComparisonCertificate, IndexMargin, TheoremId, Verdict};
pub use comparisons::{run_all, Analysis, RunOptions, CROSS_CHECK_TOLERANCE, DEFAULT_TOLERANCE};
pub use curvature::Dimension;
pub use error::{Error, GraphValidationError, Result, ValidationKind};
pub use format::{parse_graph, parse_graph_bytes, to_json};
pub use graph::WeightedBoundaryGraph;
pub use spectra::GraphSpectra;
