mod common;

use boundary_spectra::combinatorial::{edge_connectivity, Subgraph};
use boundary_spectra::curvature::{ollivier_curvature, ollivier_program, vertex_curvature};
use boundary_spectra::generate::{random_graph, WeightModel};
use boundary_spectra::lp::{solve, LinearProgram, LpSolution};
use boundary_spectra::operators::{dirichlet_laplacian, full_laplacian, neumann_laplacian};
use boundary_spectra::spectra::eigensolve;
use boundary_spectra::operators::{OperatorLabel, SelfAdjointOperator};
use boundary_spectra::{Dimension, WeightedBoundaryGraph};
use boundary_spectra_oracle::{bakry_emery_sampled, cut_bruteforce, eigen_bruteforce, lp_bruteforce, OracleConfig, OracleError};
use common::{assert_close, audit_corpus};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn weight_rows(g: &WeightedBoundaryGraph) -> Vec<Vec<f64>> {
    rows(g.weights())
}

#[test]
fn eigensolver_matches_bisection_on_random_self_adjoint_matrices() {
    let config = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let n = rng.random_range(1..=6);
        let measure: Vec<f64> = (0..n).map(|_| rng.random_range(0.2..3.0)).collect();
        let mut s = DMatrix::from_fn(n, n, |_, _| rng.random_range(-2.0..2.0));
        s = &s + s.transpose();
        let a = DMatrix::from_fn(n, n, |i, j| s[(i, j)] / measure[i]);
        let op = SelfAdjointOperator { matrix: a.clone(), measure: measure.clone(), label: OperatorLabel::FullLaplacian };
        let got = eigensolve(&op).unwrap().eigenvalues;
        let want = eigen_bruteforce(&config, &rows(&a), &measure).unwrap();
        for (g, w) in got.iter().zip(&want) {
            assert_close(*g, *w, 1e-7);
        }
    }
}

#[test]
fn eigensolver_matches_bisection_on_graph_operators() {
    let config = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for k in 0..100 {
        let g = random_graph(&mut rng, 6, WeightModel::ALL[k % 3]).unwrap();
        for op in [full_laplacian(&g), dirichlet_laplacian(&g), neumann_laplacian(&g)] {
            let got = eigensolve(&op).unwrap().eigenvalues;
            let want = eigen_bruteforce(&config, &rows(&op.matrix), &op.measure).unwrap();
            for (g, w) in got.iter().zip(&want) {
                assert_close(*g, *w, 1e-7);
            }
        }
    }
}

fn random_lp<R: Rng>(rng: &mut R) -> LinearProgram {
    let n = rng.random_range(1..=4);
    let m = rng.random_range(1..=6);
    LinearProgram {
        objective: (0..n).map(|_| rng.random_range(-3.0..3.0)).collect(),
        objective_offset: rng.random_range(-1.0..1.0),
        constraints: (0..m).map(|_| (0..n).map(|_| rng.random_range(-2.0..3.0)).collect()).collect(),
        bounds: (0..m).map(|_| rng.random_range(-1.0..4.0)).collect(),
    }
}

#[test]
fn simplex_matches_vertex_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let (mut optimal, mut other) = (0, 0);
    for _ in 0..100 {
        let lp = random_lp(&mut rng);
        let oracle = lp_bruteforce(&lp.objective, lp.objective_offset, &lp.constraints, &lp.bounds);
        match (solve(&lp), oracle) {
            (LpSolution::Optimal { value, point }, Ok(want)) => {
                assert_close(value, want, 1e-9);
                assert!(lp.is_feasible(&point, 1e-9));
                optimal += 1;
            }
            (LpSolution::Infeasible, Err(OracleError::Infeasible)) | (LpSolution::Unbounded, Err(OracleError::Unbounded)) => other += 1,
            (got, want) => panic!("simplex {got:?} vs oracle {want:?} on {lp:?}"),
        }
    }
    assert!(optimal > 20 && other > 5, "{optimal} optimal, {other} other");
}

/// Reorder variables and constraints; the optimum must not move.
fn permuted<R: Rng>(rng: &mut R, lp: &LinearProgram) -> LinearProgram {
    use rand::seq::SliceRandom;
    let mut vars: Vec<usize> = (0..lp.variable_count()).collect();
    let mut cons: Vec<usize> = (0..lp.constraints.len()).collect();
    vars.shuffle(rng);
    cons.shuffle(rng);
    LinearProgram {
        objective: vars.iter().map(|&v| lp.objective[v]).collect(),
        objective_offset: lp.objective_offset,
        constraints: cons.iter().map(|&c| vars.iter().map(|&v| lp.constraints[c][v]).collect()).collect(),
        bounds: cons.iter().map(|&c| lp.bounds[c]).collect(),
    }
}

#[test]
fn ollivier_programs_agree_across_orderings_duality_and_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut enumerated = 0;
    for k in 0..100 {
        let g = random_graph(&mut rng, 7, WeightModel::ALL[k % 3]).unwrap();
        let edges = g.edges();
        let (x, y, _) = edges[rng.random_range(0..edges.len())];
        let lp = ollivier_program(&g, x, y).unwrap();
        let value = ollivier_curvature(&g, x, y).unwrap();
        for _ in 0..5 {
            let again = solve(&permuted(&mut rng, &lp)).value().unwrap();
            assert_close(again, value, 1e-9);
        }
        let dual = solve(&lp.dual()).value().unwrap();
        assert_close(-dual + lp.objective_offset, value, 1e-9 * value.abs().max(1.0));
        if lp.variable_count() <= 4 && lp.constraints.len() <= 40 {
            let want = lp_bruteforce(&lp.objective, lp.objective_offset, &lp.constraints, &lp.bounds).unwrap();
            assert_close(value, want, 1e-9);
            enumerated += 1;
        }
    }
    assert!(enumerated >= 20, "only {enumerated} programs small enough to enumerate");
}

#[test]
fn ollivier_reference_values_by_enumeration() {
    let edge = WeightedBoundaryGraph::unit(2, &[(0, 1)], &[]).unwrap();
    let p3 = WeightedBoundaryGraph::unit(3, &[(0, 1), (1, 2)], &[]).unwrap();
    for (g, want) in [(edge, 2.0), (p3, 1.0)] {
        let lp = ollivier_program(&g, 0, 1).unwrap();
        let oracle = lp_bruteforce(&lp.objective, lp.objective_offset, &lp.constraints, &lp.bounds).unwrap();
        assert_close(oracle, want, 1e-9);
        assert_close(ollivier_curvature(&g, 0, 1).unwrap(), want, 1e-9);
    }
}

#[test]
fn edge_connectivity_matches_cut_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let mut graphs: Vec<WeightedBoundaryGraph> =
        (0..100).map(|_| random_graph(&mut rng, 8, WeightModel::Unit).unwrap()).collect();
    graphs.extend(audit_corpus().into_iter().map(|(_, g)| g).filter(|g| g.is_unit_weight() && g.vertex_count() <= 8));
    for g in graphs {
        let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(a, b, _)| (a, b)).collect();
        assert_eq!(edge_connectivity(&g, Subgraph::Whole).unwrap(), cut_bruteforce(g.vertex_count(), &edges).unwrap());

        let sub = g.interior_subgraph();
        let sub_edges: Vec<(usize, usize)> = sub.edges().into_iter().map(|(a, b, _)| (a, b)).collect();
        assert_eq!(edge_connectivity(&g, Subgraph::Interior).unwrap(), cut_bruteforce(sub.vertex_count(), &sub_edges).unwrap());
    }
}

#[test]
fn bakry_emery_matches_rayleigh_search() {
    let config = OracleConfig { sample_count: 16, ..OracleConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let dims = [Dimension::Finite(2.0), Dimension::Finite(3.0), Dimension::Finite(10.0), Dimension::Infinite];
    for k in 0..100 {
        let g = random_graph(&mut rng, 7, WeightModel::ALL[k % 3]).unwrap();
        let x = rng.random_range(0..g.vertex_count());
        let n = dims[k % dims.len()];
        let k_prod = vertex_curvature(&g, x, n).unwrap();
        let sampled = bakry_emery_sampled(&config, g.measure(), &weight_rows(&g), x, n.inverse());
        assert!(sampled >= k_prod - 1e-9 * k_prod.abs().max(1.0), "sample {sampled} beats K = {k_prod}");
        assert!(sampled <= k_prod + 1e-4 * k_prod.abs().max(1.0), "search stalled at {sampled}, K = {k_prod}");
    }
}
