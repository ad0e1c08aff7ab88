//! Bakry-Émery and Ollivier curvature, and the Lichnerowicz-type lower
//! bounds for `ν₂` and `λ₂` that they imply.
//!
//! Curvature is computed on a plain weighted graph: either `(G, m, w)` with
//! the boundary ignored, or the interior subgraph `(G|_Ω, m|_Ω, w|_Ω)`.

mod bakry_emery;
mod ollivier;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use bakry_emery::vertex_curvature;
pub use ollivier::{ollivier_curvature, ollivier_program};

use crate::certificate::{ComparisonCertificate, IndexMargin, TheoremId};
use crate::comparisons::Analysis;
use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;

/// Dimension parameter `n > 1` of `CD(K, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dimension {
    Finite(f64),
    Infinite,
}

impl Dimension {
    pub fn finite(n: f64) -> Result<Self> {
        if n > 1.0 && n.is_finite() {
            Ok(Dimension::Finite(n))
        } else {
            Err(Error::InvalidArgument(format!("dimension must be a finite number > 1, got {n}")))
        }
    }

    /// `1/n`, zero for `n = ∞`.
    pub fn inverse(self) -> f64 {
        match self {
            Dimension::Finite(n) => 1.0 / n,
            Dimension::Infinite => 0.0,
        }
    }

    /// `nK/(n-1)`, or `K` when `n = ∞`.
    pub fn lichnerowicz_bound(self, k: f64) -> f64 {
        match self {
            Dimension::Finite(n) => n * k / (n - 1.0),
            Dimension::Infinite => k,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Dimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Dimension::Infinite);
        }
        let n: f64 = s.parse().map_err(|_| Error::InvalidArgument(format!("bad dimension '{s}'")))?;
        Dimension::finite(n)
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(n) => serializer.serialize_f64(*n),
            Dimension::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CurvatureKind {
    BakryEmery { n: Dimension },
    Ollivier,
}

/// Curvature at a vertex (Bakry-Émery) or on an edge (Ollivier).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalCurvature {
    pub vertices: Vec<usize>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureResult {
    pub kind: CurvatureKind,
    pub per_location: Vec<LocalCurvature>,
    pub global_min: f64,
}

impl CurvatureResult {
    fn new(kind: CurvatureKind, per_location: Vec<LocalCurvature>) -> Self {
        let global_min = per_location.iter().map(|c| c.value).fold(f64::INFINITY, f64::min);
        Self { kind, per_location, global_min }
    }
}

/// `K(x, n)` at every vertex.
pub fn bakry_emery_curvature(graph: &WeightedBoundaryGraph, n: Dimension) -> Result<CurvatureResult> {
    let per_location = (0..graph.vertex_count())
        .map(|x| Ok(LocalCurvature { vertices: vec![x], value: vertex_curvature(graph, x, n)? }))
        .collect::<Result<_>>()?;
    Ok(CurvatureResult::new(CurvatureKind::BakryEmery { n }, per_location))
}

/// `κ(x, y)` on every edge.
pub fn ollivier_curvatures(graph: &WeightedBoundaryGraph) -> Result<CurvatureResult> {
    let per_location = graph
        .edges()
        .into_iter()
        .map(|(x, y, _)| Ok(LocalCurvature { vertices: vec![x, y], value: ollivier_curvature(graph, x, y)? }))
        .collect::<Result<_>>()?;
    Ok(CurvatureResult::new(CurvatureKind::Ollivier, per_location))
}

/// Which Lichnerowicz-type estimate to certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LichnerowiczVariant {
    /// `CD(K,n)` on `G` ⟹ `ν₂ ≥ nK/(n-1)`.
    BakryEmeryGraphNeumann,
    /// Ollivier `κ` on `G` ⟹ `ν₂ ≥ κ`.
    OllivierGraphNeumann,
    /// `CD(K,n)` on `G|_Ω` ⟹ `ν₂ ≥ nK/(n-1)`, `λ₂ ≥ nK/(n-1) + min Deg_b`
    /// and `λ₂ ≥ nK/(n-1) + s₁²`.
    BakryEmeryInterior,
    /// Ollivier `κ` on `G|_Ω` ⟹ `ν₂ ≥ κ`, `λ₂ ≥ κ + min Deg_b`, `λ₂ ≥ κ + s₁²`.
    OllivierInterior,
    /// `CD(K,n)` on `G` ⟹ `λ₂ ≥ nK/(n-1) + s₁²`.
    BakryEmeryGraphDirichlet,
    /// Ollivier `κ` on `G` ⟹ `λ₂ ≥ κ + s₁²`.
    OllivierGraphDirichlet,
}

impl LichnerowiczVariant {
    pub const ALL: [LichnerowiczVariant; 6] = [
        LichnerowiczVariant::BakryEmeryGraphNeumann,
        LichnerowiczVariant::OllivierGraphNeumann,
        LichnerowiczVariant::BakryEmeryInterior,
        LichnerowiczVariant::OllivierInterior,
        LichnerowiczVariant::BakryEmeryGraphDirichlet,
        LichnerowiczVariant::OllivierGraphDirichlet,
    ];

    fn uses_interior(self) -> bool {
        matches!(self, LichnerowiczVariant::BakryEmeryInterior | LichnerowiczVariant::OllivierInterior)
    }

    fn is_bakry_emery(self) -> bool {
        matches!(
            self,
            LichnerowiczVariant::BakryEmeryGraphNeumann
                | LichnerowiczVariant::BakryEmeryInterior
                | LichnerowiczVariant::BakryEmeryGraphDirichlet
        )
    }

    fn name(self) -> &'static str {
        match self {
            LichnerowiczVariant::BakryEmeryGraphNeumann => "be-on-g:nu2",
            LichnerowiczVariant::OllivierGraphNeumann => "ollivier-on-g:nu2",
            LichnerowiczVariant::BakryEmeryInterior => "be-on-interior:nu2,lambda2",
            LichnerowiczVariant::OllivierInterior => "ollivier-on-interior:nu2,lambda2",
            LichnerowiczVariant::BakryEmeryGraphDirichlet => "be-on-g:lambda2",
            LichnerowiczVariant::OllivierGraphDirichlet => "ollivier-on-g:lambda2",
        }
    }
}

/// Certify one Lichnerowicz-type estimate. A variant whose hypotheses fail
/// (nonpositive curvature bound, disconnected interior, `|Ω| < 2`) yields a
/// `NotApplicable` certificate rather than an error.
pub fn certify_lichnerowicz(
    analysis: &Analysis<'_>,
    variant: LichnerowiczVariant,
    n: Dimension,
    tol: f64,
) -> Result<ComparisonCertificate> {
    let theorem = if variant.is_bakry_emery() { TheoremId::LichnerowiczBE } else { TheoremId::LichnerowiczOllivier };
    let mut label = variant.name().to_string();
    if variant.is_bakry_emery() {
        label = format!("{label} (n={n})");
    }
    let graph = analysis.graph;
    let not_applicable = |reason: &str| Ok(ComparisonCertificate::not_applicable(theorem, Some(label.clone()), reason));

    if graph.interior().len() < 2 {
        return not_applicable("|Omega| < 2, so nu_2 and lambda_2 do not exist");
    }
    let interior;
    let target = if variant.uses_interior() {
        if graph.interior_component_count() != 1 {
            return not_applicable("interior subgraph is disconnected");
        }
        interior = graph.interior_subgraph();
        &interior
    } else {
        graph
    };
    let curvature = if variant.is_bakry_emery() {
        bakry_emery_curvature(target, n)?.global_min
    } else {
        ollivier_curvatures(target)?.global_min
    };
    // a bound within tolerance of zero is rounding noise, not positive curvature
    if curvature <= analysis.absolute(tol) {
        return not_applicable(&format!("curvature lower bound {curvature} is not positive"));
    }
    let bound = if variant.is_bakry_emery() { n.lichnerowicz_bound(curvature) } else { curvature };

    let spectra = &analysis.spectra;
    let (nu2, lambda2) = (spectra.nu()[1], spectra.lambda()[1]);
    let s1 = spectra.singular.smallest_squared();
    let min_deg_b = graph.boundary_degrees().into_iter().fold(f64::INFINITY, f64::min);
    let records = match variant {
        LichnerowiczVariant::BakryEmeryGraphNeumann | LichnerowiczVariant::OllivierGraphNeumann => {
            vec![IndexMargin::new(2, "nu_2", nu2, Some(bound), None)]
        }
        LichnerowiczVariant::BakryEmeryInterior | LichnerowiczVariant::OllivierInterior => vec![
            IndexMargin::new(2, "nu_2", nu2, Some(bound), None),
            IndexMargin::new(2, "lambda_2 (+ min Deg_b)", lambda2, Some(bound + min_deg_b), None),
            IndexMargin::new(2, "lambda_2 (+ s_1^2)", lambda2, Some(bound + s1), None),
        ],
        LichnerowiczVariant::BakryEmeryGraphDirichlet | LichnerowiczVariant::OllivierGraphDirichlet => {
            vec![IndexMargin::new(2, "lambda_2 (+ s_1^2)", lambda2, Some(bound + s1), None)]
        }
    };
    Ok(ComparisonCertificate::from_records(theorem, Some(label), records, analysis.absolute(tol)))
}
