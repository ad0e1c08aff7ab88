#![allow(dead_code)]

use boundary_spectra::generate::{audit_instance, WeightModel};
use boundary_spectra::WeightedBoundaryGraph;
use nalgebra::DVector;
use rand::Rng;

pub const AUDIT_SEED: u64 = 42;
pub const AUDIT_SIZE: u64 = 200;
pub const AUDIT_MAX_VERTICES: usize = 12;

pub fn audit_corpus() -> Vec<(WeightModel, WeightedBoundaryGraph)> {
    (0..AUDIT_SIZE).map(|i| audit_instance(AUDIT_SEED, i, AUDIT_MAX_VERTICES).unwrap()).collect()
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> DVector<f64> {
    DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
}

pub fn p3_two_sided() -> WeightedBoundaryGraph {
    WeightedBoundaryGraph::unit(3, &[(0, 1), (1, 2)], &[0, 2]).unwrap()
}

pub fn k22() -> WeightedBoundaryGraph {
    WeightedBoundaryGraph::unit(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[0, 1]).unwrap()
}

pub fn assert_close(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "got {got}, want {want} (tol {tol})");
}
