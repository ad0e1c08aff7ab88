mod common;

use boundary_spectra::linalg::weighted_dot;
use boundary_spectra::operators::{
    apply_laplacian, boundary_map, dirichlet_form, dirichlet_laplacian, dirichlet_laplacian_by_identity, dirichlet_neumann_gap,
    neumann_laplacian, neumann_laplacian_by_identity, normal_derivative, normal_extension, zero_extension,
};
use common::{audit_corpus, random_vector};
use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn relative(defect: f64, scale: f64) -> f64 {
    defect / scale.max(1.0)
}

#[test]
fn dirichlet_and_neumann_match_their_identities() {
    for (_, g) in audit_corpus() {
        let d = dirichlet_laplacian(&g).matrix;
        let d_id = dirichlet_laplacian_by_identity(&g).matrix;
        assert!(relative((&d - &d_id).amax(), d.amax()) <= 1e-10);
        let n = neumann_laplacian(&g).matrix;
        let n_id = neumann_laplacian_by_identity(&g).matrix;
        assert!(relative((&n - &n_id).amax(), n.amax()) <= 1e-10);
        let gap = dirichlet_neumann_gap(&g);
        assert!(relative((&d - &n - &gap).amax(), d.amax()) <= 1e-10);
    }
}

#[test]
fn greens_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (_, g) in audit_corpus() {
        let n = g.vertex_count();
        for _ in 0..100 {
            let (u, v) = (random_vector(&mut rng, n), random_vector(&mut rng, n));
            let lap = -apply_laplacian(&g, &u);
            let interior: f64 = g.interior().iter().map(|&y| g.measure()[y] * lap[y] * v[y]).sum();
            let normal = normal_derivative(&g, &u);
            let boundary: f64 = g.boundary().iter().enumerate().map(|(k, &x)| g.measure()[x] * normal[k] * v[x]).sum();
            let form = dirichlet_form(&g, &u, &v);
            let scale = interior.abs().max(form.abs()).max(boundary.abs());
            assert!(relative((interior - (-form + boundary)).abs(), scale) <= 1e-10);
        }
    }
}

#[test]
fn quadratic_forms_of_extensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (_, g) in audit_corpus() {
        let m = g.interior_measure();
        let u = random_vector(&mut rng, g.interior().len());
        let e0 = zero_extension(&g, &u);
        let dir = weighted_dot(&(dirichlet_laplacian(&g).matrix * &u), &u, &m);
        let form = dirichlet_form(&g, &e0, &e0);
        assert!(relative((dir - form).abs(), form.abs()) <= 1e-10);

        let n0 = normal_extension(&g, &u);
        let neu = weighted_dot(&(neumann_laplacian(&g).matrix * &u), &u, &m);
        let form = dirichlet_form(&g, &n0, &n0);
        assert!(relative((neu - form).abs(), form.abs()) <= 1e-10);
        assert!(normal_derivative(&g, &n0).amax() <= 1e-10 * n0.amax().max(1.0) * g.weights().amax().max(1.0));
    }
}

#[test]
fn boundary_maps_are_adjoint_and_bounded_by_boundary_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (_, g) in audit_corpus() {
        let (a_omega, a_boundary) = boundary_map(&g);
        let u = random_vector(&mut rng, g.interior().len());
        let f = random_vector(&mut rng, g.boundary().len());
        let left = weighted_dot(&(&a_boundary.matrix * &f), &u, &g.interior_measure());
        let right = weighted_dot(&f, &(&a_omega.matrix * &u), &g.boundary_measure());
        assert!((left - right).abs() <= 1e-12 * left.abs().max(1.0));

        let gap = weighted_dot(&(dirichlet_neumann_gap(&g) * &u), &u, &g.interior_measure());
        let deg_b = DVector::from_vec(g.boundary_degrees());
        let bound = weighted_dot(&deg_b.component_mul(&u), &u, &g.interior_measure());
        assert!(gap <= bound * (1.0 + 1e-12) + 1e-12);
        assert!(gap >= -1e-12 * bound.max(1.0));
    }
}
