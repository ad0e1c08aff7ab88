use boundary_spectra::generate::{random_graph, WeightModel};
use boundary_spectra::operators::{dirichlet_laplacian, full_laplacian, interior_laplacian, neumann_laplacian};
use boundary_spectra::spectra::eigensolve;
use boundary_spectra::{parse_graph, to_json, Analysis, WeightedBoundaryGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(seed: u64, max_vertices: usize, model: usize) -> WeightedBoundaryGraph {
    random_graph(&mut ChaCha8Rng::seed_from_u64(seed), max_vertices, WeightModel::ALL[model]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip_is_exact(seed in any::<u64>(), max_v in 2usize..10, model in 0usize..3) {
        let g = graph(seed, max_v, model);
        let text = to_json(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn comparisons_hold(seed in any::<u64>(), max_v in 2usize..10, model in 0usize..3) {
        let g = graph(seed, max_v, model);
        let a = Analysis::new(&g).unwrap();
        for cert in a.comparisons(1e-9) {
            prop_assert!(cert.holds(), "{:?}", cert);
        }
    }

    #[test]
    fn spectra_are_sorted_and_eigenvectors_orthonormal(seed in any::<u64>(), max_v in 2usize..10, model in 0usize..3) {
        let g = graph(seed, max_v, model);
        for op in [full_laplacian(&g), interior_laplacian(&g), dirichlet_laplacian(&g), neumann_laplacian(&g)] {
            let s = eigensolve(&op).unwrap();
            prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(s.orthonormality_defect() <= 1e-10);
            let scale = s.eigenvalues.last().copied().unwrap_or(0.0).abs().max(1.0);
            prop_assert!(s.max_relative_residual(&op) <= 1e-9 * scale);
            prop_assert!(s.eigenvalues[0] >= -1e-10 * scale);
        }
    }

    #[test]
    fn relabeling_preserves_spectra(seed in any::<u64>(), max_v in 2usize..9, model in 0usize..3) {
        let g = graph(seed, max_v, model);
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).rev().collect();
        let measure: Vec<f64> = (0..n).map(|k| g.measure()[perm[k]]).collect();
        let edges: Vec<_> = g.edges().into_iter().map(|(x, y, w)| (perm[x], perm[y], w)).collect();
        let boundary: Vec<usize> = g.boundary().iter().map(|&x| perm[x]).collect();
        let h = WeightedBoundaryGraph::from_edges(measure, &edges, &boundary).unwrap();
        let (a, b) = (Analysis::new(&g).unwrap(), Analysis::new(&h).unwrap());
        let tol = 1e-9 * a.spectra.scale();
        for (x, y) in [(a.spectra.mu(), b.spectra.mu()), (a.spectra.lambda(), b.spectra.lambda()), (a.spectra.nu(), b.spectra.nu())] {
            for (p, q) in x.iter().zip(y) {
                prop_assert!((p - q).abs() <= tol);
            }
        }
    }
}
