//! Spectra of measure-self-adjoint operators.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::Result;
use crate::graph::WeightedBoundaryGraph;
use crate::linalg::{symmetric_eigen, weighted_dot};
use crate::operators::{
    dirichlet_laplacian, dirichlet_neumann_gap, full_laplacian, interior_laplacian, neumann_laplacian,
    SelfAdjointOperator,
};

#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Ascending, with multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors as columns, orthonormal for `⟨·,·⟩_measure`.
    pub eigenvectors: DMatrix<f64>,
    pub measure: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvector(&self, i: usize) -> DVector<f64> {
        self.eigenvectors.column(i).into_owned()
    }

    /// `max_ij |⟨v_i, v_j⟩_m - δ_ij|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.eigenvalues.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot = weighted_dot(&self.eigenvector(i), &self.eigenvector(j), &self.measure);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max_i ‖Op v_i - λ_i v_i‖_m / max(1, |λ_i|)`.
    pub fn max_relative_residual(&self, op: &SelfAdjointOperator) -> f64 {
        (0..self.eigenvalues.len())
            .map(|i| {
                let v = self.eigenvector(i);
                let r = op.apply(&v) - &v * self.eigenvalues[i];
                weighted_dot(&r, &r, &self.measure).sqrt() / self.eigenvalues[i].abs().max(1.0)
            })
            .fold(0.0, f64::max)
    }
}

/// Full eigen-decomposition of an `M`-self-adjoint operator.
///
/// `S = M^{1/2} A M^{-1/2}` is symmetric; it is diagonalized by Jacobi
/// rotations and its eigenvectors are mapped back by `M^{-1/2}`.
pub fn eigensolve(op: &SelfAdjointOperator) -> Result<Spectrum> {
    let n = op.dim();
    let sqrt_m: Vec<f64> = op.measure.iter().map(|m| m.sqrt()).collect();
    let symmetric = DMatrix::from_fn(n, n, |i, j| sqrt_m[i] * op.matrix[(i, j)] / sqrt_m[j]);
    let eig = symmetric_eigen(&symmetric)?;
    let eigenvectors = DMatrix::from_fn(n, n, |i, j| eig.vectors[(i, j)] / sqrt_m[i]);
    Ok(Spectrum { eigenvalues: eig.values, eigenvectors, measure: op.measure.clone() })
}

/// Singular values `s_1 ≤ … ≤ s_|Ω|` of `Deg^{-1/2} A_Ω : R^Ω → R^B`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularSpectrum {
    pub singular_values: Vec<f64>,
}

impl SingularSpectrum {
    pub fn smallest_squared(&self) -> f64 {
        self.singular_values.first().map_or(0.0, |s| s * s)
    }

    pub fn largest_squared(&self) -> f64 {
        self.singular_values.last().map_or(0.0, |s| s * s)
    }
}

/// The squares `s_i²` are the eigenvalues of `A_B Deg⁻¹ A_Ω` under `⟨·,·⟩_Ω`.
pub fn weighted_singular_values(graph: &WeightedBoundaryGraph) -> Result<SingularSpectrum> {
    let op = SelfAdjointOperator {
        matrix: dirichlet_neumann_gap(graph),
        measure: graph.interior_measure(),
        // not one of the four Laplacians; the label is unused by eigensolve
        label: crate::operators::OperatorLabel::InteriorLaplacian,
    };
    let spectrum = eigensolve(&op)?;
    Ok(SingularSpectrum { singular_values: spectrum.eigenvalues.iter().map(|&s2| s2.max(0.0).sqrt()).collect() })
}

/// Every spectrum the comparison theorems talk about, computed once.
#[derive(Debug, Clone)]
pub struct GraphSpectra {
    /// `μ_i`, eigenvalues of `-Δ` on `V`.
    pub laplacian: Spectrum,
    /// `λ_i`, Dirichlet eigenvalues.
    pub dirichlet: Spectrum,
    /// `ν_i`, Neumann eigenvalues.
    pub neumann: Spectrum,
    /// `μ_i(Ω)`, eigenvalues of `-Δ_Ω`.
    pub interior: Spectrum,
    pub singular: SingularSpectrum,
}

impl GraphSpectra {
    pub fn compute(graph: &WeightedBoundaryGraph) -> Result<Self> {
        Ok(Self {
            laplacian: eigensolve(&full_laplacian(graph))?,
            dirichlet: eigensolve(&dirichlet_laplacian(graph))?,
            neumann: eigensolve(&neumann_laplacian(graph))?,
            interior: eigensolve(&interior_laplacian(graph))?,
            singular: weighted_singular_values(graph)?,
        })
    }

    pub fn mu(&self) -> &[f64] {
        &self.laplacian.eigenvalues
    }

    pub fn lambda(&self) -> &[f64] {
        &self.dirichlet.eigenvalues
    }

    pub fn nu(&self) -> &[f64] {
        &self.neumann.eigenvalues
    }

    pub fn mu_interior(&self) -> &[f64] {
        &self.interior.eigenvalues
    }

    /// Largest eigenvalue across all four operators, at least 1.
    pub fn scale(&self) -> f64 {
        [self.mu(), self.lambda(), self.nu(), self.mu_interior()]
            .iter()
            .flat_map(|s| s.iter())
            .fold(1.0f64, |acc, v| acc.max(v.abs()))
    }
}
