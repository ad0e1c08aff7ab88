mod common;

use boundary_spectra::combinatorial::{fiedler_bounds, friedman_bounds};
use boundary_spectra::curvature::{bakry_emery_curvature, certify_lichnerowicz, ollivier_curvature, LichnerowiczVariant};
use boundary_spectra::generate::{random_graph, WeightModel};
use boundary_spectra::{Analysis, Dimension, WeightedBoundaryGraph};
use common::audit_corpus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn lichnerowicz_certificates_hold_on_audit_corpus() {
    let mut applicable = 0;
    for (_, g) in audit_corpus() {
        let a = Analysis::new(&g).unwrap();
        for n in [Dimension::Finite(2.0), Dimension::Finite(5.0), Dimension::Infinite] {
            for variant in LichnerowiczVariant::ALL {
                let cert = certify_lichnerowicz(&a, variant, n, 1e-9).unwrap();
                if !cert.records.is_empty() {
                    applicable += 1;
                    assert!(cert.holds(), "{cert:?}");
                }
            }
        }
    }
    assert!(applicable > 100, "{applicable}");
}

#[test]
fn fiedler_and_friedman_hold_on_unit_audit_graphs() {
    let mut checked = 0;
    for (_, g) in audit_corpus().into_iter().filter(|(_, g)| g.is_unit_weight()) {
        let a = Analysis::new(&g).unwrap();
        let mut certs = vec![fiedler_bounds(&a, 1e-9).unwrap()];
        certs.extend(friedman_bounds(&a, 1e-9).unwrap());
        for cert in certs.iter().filter(|c| !c.records.is_empty()) {
            checked += 1;
            assert!(cert.holds() && cert.min_margin() >= -1e-9 * a.spectra.scale(), "{cert:?}");
        }
    }
    assert!(checked > 50, "{checked}");
}

#[test]
fn bakry_emery_monotone_in_dimension() {
    let grid = [2.0, 3.0, 5.0, 10.0, 1e6].map(Dimension::Finite).into_iter().chain([Dimension::Infinite]);
    let grid: Vec<Dimension> = grid.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for k in 0..20 {
        let g = random_graph(&mut rng, 9, WeightModel::ALL[k % 3]).unwrap();
        let values: Vec<Vec<f64>> = grid
            .iter()
            .map(|&n| bakry_emery_curvature(&g, n).unwrap().per_location.iter().map(|c| c.value).collect())
            .collect();
        for pair in values.windows(2) {
            for (lo, hi) in pair[0].iter().zip(&pair[1]) {
                assert!(*hi >= lo - 1e-9 * lo.abs().max(1.0), "{lo} then {hi}");
            }
        }
    }
}

/// Attach a unit pendant vertex to `z`.
fn with_pendant(g: &WeightedBoundaryGraph, z: usize) -> WeightedBoundaryGraph {
    let n = g.vertex_count();
    let mut measure = g.measure().to_vec();
    measure.push(1.0);
    let mut edges = g.edges();
    edges.push((z, n, 1.0));
    WeightedBoundaryGraph::from_edges(measure, &edges, g.boundary()).unwrap()
}

#[test]
fn ollivier_is_local() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut augmented = 0;
    while augmented < 20 {
        let g = random_graph(&mut rng, 12, WeightModel::ALL[augmented % 3]).unwrap();
        let d = g.distances();
        let edges = g.edges();
        let (x, y, _) = edges[rng.random_range(0..edges.len())];
        let far: Vec<usize> = (0..g.vertex_count()).filter(|&z| d[x][z] >= 2 && d[y][z] >= 2).collect();
        if far.is_empty() {
            continue;
        }
        let z = far[rng.random_range(0..far.len())];
        let before = ollivier_curvature(&g, x, y).unwrap();
        let after = ollivier_curvature(&with_pendant(&g, z), x, y).unwrap();
        assert!((before - after).abs() <= 1e-9 * before.abs().max(1.0), "{before} vs {after}");
        augmented += 1;
    }
}
