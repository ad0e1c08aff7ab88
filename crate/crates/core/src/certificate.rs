//! Margin-annotated certificates for eigenvalue inequalities.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    /// `ν_i ≥ μ_i`.
    NeuVsLap,
    /// `μ_i(Ω) + min Deg_b ≤ λ_i ≤ μ_i(Ω) + max Deg_b`.
    DiriVsInteriorTwoSided,
    /// `ν_i ≥ μ_i(Ω)`.
    NeuVsInterior,
    /// `ν_i + s_1² ≤ λ_i ≤ ν_i + s_|Ω|²`.
    DiriVsNeuTwoSided,
    /// `μ_{i+|B|} ≥ λ_i`, never with equality for every `i`.
    LapVsDiri,
    LichnerowiczBE,
    LichnerowiczOllivier,
    FiedlerType,
    FriedmanType,
}

impl TheoremId {
    pub const COMPARISONS: [TheoremId; 5] = [
        TheoremId::NeuVsLap,
        TheoremId::DiriVsInteriorTwoSided,
        TheoremId::NeuVsInterior,
        TheoremId::DiriVsNeuTwoSided,
        TheoremId::LapVsDiri,
    ];

    pub const ALL: [TheoremId; 9] = [
        TheoremId::NeuVsLap,
        TheoremId::DiriVsInteriorTwoSided,
        TheoremId::NeuVsInterior,
        TheoremId::DiriVsNeuTwoSided,
        TheoremId::LapVsDiri,
        TheoremId::LichnerowiczBE,
        TheoremId::LichnerowiczOllivier,
        TheoremId::FiedlerType,
        TheoremId::FriedmanType,
    ];

    /// Short name used on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::NeuVsLap => "neu-lap",
            TheoremId::DiriVsInteriorTwoSided => "diri-interior",
            TheoremId::NeuVsInterior => "neu-interior",
            TheoremId::DiriVsNeuTwoSided => "diri-neu",
            TheoremId::LapVsDiri => "lap-diri",
            TheoremId::LichnerowiczBE => "lichnerowicz-be",
            TheoremId::LichnerowiczOllivier => "lichnerowicz-ollivier",
            TheoremId::FiedlerType => "fiedler",
            TheoremId::FriedmanType => "friedman",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::NeuVsLap => "nu_i >= mu_i (Neumann vs Laplacian)",
            TheoremId::DiriVsInteriorTwoSided => {
                "mu_i(Omega) + min Deg_b <= lambda_i <= mu_i(Omega) + max Deg_b (Dirichlet vs interior Laplacian)"
            }
            TheoremId::NeuVsInterior => "nu_i >= mu_i(Omega) (Neumann vs interior Laplacian)",
            TheoremId::DiriVsNeuTwoSided => "nu_i + s_1^2 <= lambda_i <= nu_i + s_max^2 (Dirichlet vs Neumann)",
            TheoremId::LapVsDiri => "mu_{i+|B|} >= lambda_i, not all equal (Laplacian vs Dirichlet)",
            TheoremId::LichnerowiczBE => "nu_2, lambda_2 >= nK/(n-1) + ... under CD(K,n)",
            TheoremId::LichnerowiczOllivier => "nu_2, lambda_2 >= kappa + ... under Ollivier curvature >= kappa",
            TheoremId::FiedlerType => "nu_2, lambda_2 >= 2 e (1 - cos(pi/N)) + ...",
            TheoremId::FriedmanType => "nu_i, lambda_i >= 2(1 - cos(pi/(2k+1))) or P(k, mu_i(P_i)) + ...",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
        .find(|t| t.as_str() == s)
        .ok_or_else(|| format!("unknown theorem '{s}'"))
    }
}

/// One inequality `lower ≤ value ≤ upper` (either side may be absent).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexMargin {
    /// 1-based eigenvalue index.
    pub index: usize,
    /// What `value` is, e.g. `"nu_2"`.
    pub quantity: String,
    pub value: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// `min(value - lower, upper - value)` over the sides present.
    pub margin: f64,
    /// Every side present holds with `|margin| ≤ tolerance`.
    pub equality: bool,
}

impl IndexMargin {
    pub fn new(index: usize, quantity: impl Into<String>, value: f64, lower: Option<f64>, upper: Option<f64>) -> Self {
        let margin = [lower.map(|l| value - l), upper.map(|u| u - value)]
            .into_iter()
            .flatten()
            .fold(f64::INFINITY, f64::min);
        Self { index, quantity: quantity.into(), value, lower, upper, margin, equality: false }
    }

    pub fn lower_margin(&self) -> Option<f64> {
        self.lower.map(|l| self.value - l)
    }

    pub fn upper_margin(&self) -> Option<f64> {
        self.upper.map(|u| u - self.value)
    }

    /// Equality on every side present, at an absolute tolerance.
    pub fn is_equal_at(&self, tol: f64) -> bool {
        [self.lower_margin(), self.upper_margin()].into_iter().flatten().all(|m| m.abs() <= tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", content = "detail")]
pub enum Verdict {
    Holds,
    /// 1-based indices of the failing records.
    FailsAt(Vec<usize>),
    /// A hypothesis of the theorem is not met.
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonCertificate {
    pub theorem: TheoremId,
    pub variant: Option<String>,
    pub records: Vec<IndexMargin>,
    /// Absolute tolerance used for verdict and equality flags.
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl ComparisonCertificate {
    pub fn from_records(theorem: TheoremId, variant: Option<String>, mut records: Vec<IndexMargin>, tolerance: f64) -> Self {
        for r in &mut records {
            r.equality = r.is_equal_at(tolerance);
        }
        let failing: Vec<usize> = records.iter().filter(|r| r.margin < -tolerance).map(|r| r.index).collect();
        let verdict = if failing.is_empty() { Verdict::Holds } else { Verdict::FailsAt(failing) };
        Self { theorem, variant, records, tolerance, verdict }
    }

    pub fn not_applicable(theorem: TheoremId, variant: Option<String>, reason: impl Into<String>) -> Self {
        Self { theorem, variant, records: vec![], tolerance: 0.0, verdict: Verdict::NotApplicable(reason.into()) }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn fails(&self) -> bool {
        matches!(self.verdict, Verdict::FailsAt(_))
    }

    pub fn min_margin(&self) -> f64 {
        self.records.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min)
    }

    /// 1-based indices where equality holds at the absolute tolerance `tol`.
    pub fn equality_indices(&self, tol: f64) -> Vec<usize> {
        self.records.iter().filter(|r| r.is_equal_at(tol)).map(|r| r.index).collect()
    }

    pub fn all_equal_at(&self, tol: f64) -> bool {
        !self.records.is_empty() && self.records.iter().all(|r| r.is_equal_at(tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_and_equality_follow_tolerance() {
        let records = vec![
            IndexMargin::new(1, "nu_1", 0.0, Some(1e-12), None),
            IndexMargin::new(2, "nu_2", 2.0, Some(1.0), None),
            IndexMargin::new(3, "nu_3", 1.0, Some(1.5), None),
        ];
        let c = ComparisonCertificate::from_records(TheoremId::NeuVsLap, None, records, 1e-9);
        assert_eq!(c.verdict, Verdict::FailsAt(vec![3]));
        assert_eq!(c.records.iter().map(|r| r.equality).collect::<Vec<_>>(), vec![true, false, false]);
        assert_eq!(c.min_margin(), -0.5);
    }

    #[test]
    fn two_sided_margin_is_the_tighter_side() {
        let r = IndexMargin::new(1, "lambda_1", 0.5, Some(0.0), Some(0.6));
        assert!((r.margin - 0.1).abs() < 1e-15);
        assert!(!r.is_equal_at(0.2));
        assert!(r.is_equal_at(0.5));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::COMPARISONS {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }
}
