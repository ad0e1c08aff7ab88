//! Constructed graphs with known equality patterns.
//!
//! The two recipes build `ρ`-factorized graphs (`w_xy = ρ m_x m_y` between
//! every boundary and every interior vertex) whose interior weights are
//! scaled against the relevant spectral threshold. The `*_positive` and
//! `*_negative` builders produce random members of each structural class and
//! small perturbations that leave it.

use nalgebra::DMatrix;
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_distr::{Distribution, LogNormal};

use crate::error::{Error, Result};
use crate::graph::WeightedBoundaryGraph;
use crate::operators::interior_laplacian;
use crate::spectra::eigensolve;

/// Parameters of the two recipes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecipeParams {
    /// Number of components `j` of the interior.
    pub components: usize,
    pub boundary: usize,
    pub interior: usize,
    pub rho: f64,
    /// Interior spectral quantity divided by its threshold; see each recipe.
    pub weight_scale: f64,
}

impl RecipeParams {
    pub fn new(components: usize, boundary: usize, interior: usize) -> Self {
        Self { components, boundary, interior, rho: 1.0, weight_scale: 1.0 }
    }

    fn check(&self) -> Result<()> {
        if self.boundary == 0 || self.components == 0 || self.components > self.interior {
            return Err(Error::InvalidArgument(format!(
                "need |B| >= 1 and 1 <= j <= |Omega|, got {:?}",
                (self.components, self.boundary, self.interior)
            )));
        }
        if !(self.rho > 0.0 && self.weight_scale > 0.0 && self.rho.is_finite() && self.weight_scale.is_finite()) {
            return Err(Error::InvalidArgument("rho and weight_scale must be positive".into()));
        }
        Ok(())
    }
}

/// Interior vertices `0..|Ω|`, boundary vertices after them; `w_xy = ρ_x m_x m_y`
/// on `B × Ω` and the given interior edges.
pub fn rho_factorized(
    interior_measure: &[f64],
    boundary_measure: &[f64],
    rho: &[f64],
    interior_edges: &[(usize, usize, f64)],
) -> Result<WeightedBoundaryGraph> {
    let no = interior_measure.len();
    let nb = boundary_measure.len();
    if rho.len() != nb {
        return Err(Error::InvalidArgument("one rho value per boundary vertex".into()));
    }
    let measure: Vec<f64> = interior_measure.iter().chain(boundary_measure).copied().collect();
    let mut edges: Vec<(usize, usize, f64)> = interior_edges.to_vec();
    for (k, (&mx, &r)) in boundary_measure.iter().zip(rho).enumerate() {
        for (y, &my) in interior_measure.iter().enumerate() {
            edges.push((y, no + k, r * mx * my));
        }
    }
    WeightedBoundaryGraph::from_edges(measure, &edges, &(no..no + nb).collect::<Vec<_>>())
}

/// Deterministic layout shared by the recipes: interior measures cycle
/// through 1, 1.5, 2; boundary measures alternate 1, 1.25 and are rescaled to
/// total `boundary_volume`; interior vertex `k` joins component `k mod j`,
/// each component a path.
type Layout = (Vec<f64>, Vec<f64>, Vec<(usize, usize, f64)>);

fn recipe_layout(p: &RecipeParams, boundary_ratio: f64) -> Layout {
    let interior: Vec<f64> = (0..p.interior).map(|k| 1.0 + 0.5 * (k % 3) as f64).collect();
    let raw: Vec<f64> = (0..p.boundary).map(|k| 1.0 + 0.25 * (k % 2) as f64).collect();
    let target = boundary_ratio * interior.iter().sum::<f64>();
    let total: f64 = raw.iter().sum();
    let boundary = raw.iter().map(|b| b * target / total).collect();
    let mut edges = Vec::new();
    for c in 0..p.components {
        let members: Vec<usize> = (c..p.interior).step_by(p.components).collect();
        for (e, pair) in members.windows(2).enumerate() {
            edges.push((pair[0], pair[1], 1.0 + 0.25 * (e % 3) as f64));
        }
    }
    (interior, boundary, edges)
}

fn interior_spectrum(interior_measure: &[f64], edges: &[(usize, usize, f64)]) -> Result<Vec<f64>> {
    let g = WeightedBoundaryGraph::from_edges(interior_measure.to_vec(), edges, &[])?;
    Ok(eigensolve(&interior_laplacian(&g))?.eigenvalues)
}

fn scaled(edges: &[(usize, usize, f64)], t: f64) -> Vec<(usize, usize, f64)> {
    edges.iter().map(|&(a, b, w)| (a, b, w * t)).collect()
}

/// The construction for equality in `ν_i ≥ μ_i` at every index:
/// `V_B = V_Ω / 2` and interior weights scaled so that
/// `μ_|Ω|(Ω) = weight_scale · ρ (V_Ω - V_B)`.
///
/// Equality holds at every index iff `weight_scale ≤ 1` (or the interior has
/// no edges).
pub fn neumann_laplacian_recipe(p: RecipeParams) -> Result<WeightedBoundaryGraph> {
    p.check()?;
    let (interior, boundary, edges) = recipe_layout(&p, 0.5);
    let (vo, vb): (f64, f64) = (interior.iter().sum(), boundary.iter().sum());
    let edges = match interior_spectrum(&interior, &edges)?.last() {
        Some(&top) if top > 0.0 => scaled(&edges, p.weight_scale * p.rho * (vo - vb) / top),
        _ => edges,
    };
    rho_factorized(&interior, &boundary, &vec![p.rho; p.boundary], &edges)
}

/// The construction for equality in `μ_{i+|B|} ≥ λ_i` at every index but
/// `j`: `V_B = 3 V_Ω / 2` and interior weights scaled so that
/// `μ_{j+1}(Ω) = weight_scale · ρ V_Ω`.
///
/// The pattern is equality-except-`j` iff `weight_scale ≥ 1` (or `j = |Ω|`).
pub fn laplacian_dirichlet_recipe(p: RecipeParams) -> Result<WeightedBoundaryGraph> {
    p.check()?;
    let (interior, boundary, edges) = recipe_layout(&p, 1.5);
    let vo: f64 = interior.iter().sum();
    let edges = match interior_spectrum(&interior, &edges)?.get(p.components) {
        Some(&gap) if gap > 0.0 => scaled(&edges, p.weight_scale * p.rho * vo / gap),
        _ => edges,
    };
    rho_factorized(&interior, &boundary, &vec![p.rho; p.boundary], &edges)
}

fn lognormal<R: Rng + ?Sized>(rng: &mut R, sigma: f64) -> f64 {
    LogNormal::new(0.0, sigma).expect("valid parameters").sample(rng)
}

/// Random connected interior on `n` vertices: a spanning path plus
/// Erdős–Rényi extras, with lognormal weights.
fn random_interior_edges<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize, f64)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if b == a + 1 || rng.random_bool(0.4) {
                edges.push((a, b, lognormal(rng, 0.5)));
            }
        }
    }
    edges
}

/// Rescale the boundary edges at each interior vertex so that `Deg_b ≡ c`.
fn equalize_boundary_degree(measure: &[f64], edges: &mut [(usize, usize, f64)], interior: usize, c: f64) {
    for (y, &m) in measure.iter().enumerate().take(interior) {
        let total: f64 = edges.iter().filter(|e| e.0 == y && e.1 >= interior).map(|e| e.2).sum();
        for e in edges.iter_mut().filter(|e| e.0 == y && e.1 >= interior) {
            e.2 *= c * m / total;
        }
    }
}

fn boundary_list(interior: usize, n: usize) -> Vec<usize> {
    (interior..n).collect()
}

/// Random graph with `Deg_b` constant on `Ω` and `|Ω| ≥ 2`.
pub fn constant_boundary_degree_positive<R: Rng + ?Sized>(rng: &mut R) -> Result<WeightedBoundaryGraph> {
    let no = rng.random_range(2..=5);
    let nb = rng.random_range(1..=4);
    let n = no + nb;
    let measure: Vec<f64> = (0..n).map(|_| lognormal(rng, 0.5)).collect();
    let mut edges = random_interior_edges(rng, no);
    let mut covered = vec![false; no];
    for x in no..n {
        let forced = rng.random_range(0..no);
        for (y, seen) in covered.iter_mut().enumerate() {
            if y == forced || rng.random_bool(0.4) {
                edges.push((y, x, lognormal(rng, 0.5)));
                *seen = true;
            }
        }
    }
    for y in (0..no).filter(|&y| !covered[y]) {
        edges.push((y, rng.random_range(no..n), lognormal(rng, 0.5)));
    }
    equalize_boundary_degree(&measure, &mut edges, no, lognormal(rng, 0.5));
    WeightedBoundaryGraph::from_edges(measure, &edges, &boundary_list(no, n))
}

/// Every boundary vertex is a pendant; with `equal_degree`, `Deg_b` is also
/// constant on `Ω`.
fn pendant_graph<R: Rng + ?Sized>(rng: &mut R, equal_degree: bool) -> Result<WeightedBoundaryGraph> {
    let no = rng.random_range(2..=5);
    let pendants: Vec<usize> = (0..no).map(|_| rng.random_range(1..=2)).collect();
    let n = no + pendants.iter().sum::<usize>();
    let measure: Vec<f64> = (0..n).map(|_| lognormal(rng, 0.5)).collect();
    let mut edges = random_interior_edges(rng, no);
    let mut next = no;
    for (y, &count) in pendants.iter().enumerate() {
        for _ in 0..count {
            edges.push((y, next, lognormal(rng, 0.5)));
            next += 1;
        }
    }
    if equal_degree {
        equalize_boundary_degree(&measure, &mut edges, no, lognormal(rng, 0.5));
    }
    WeightedBoundaryGraph::from_edges(measure, &edges, &boundary_list(no, n))
}

/// Every boundary vertex has exactly one interior neighbor.
pub fn one_neighbor_positive<R: Rng + ?Sized>(rng: &mut R) -> Result<WeightedBoundaryGraph> {
    pendant_graph(rng, false)
}

/// Pendant boundary with `Σ_x w_xz² / (m_z Σ_y w_xy) = Deg_b(z)` constant.
pub fn dirichlet_neumann_positive<R: Rng + ?Sized>(rng: &mut R) -> Result<WeightedBoundaryGraph> {
    pendant_graph(rng, true)
}

/// Multiply one boundary edge weight by a factor in `[1.1, 1.6]`.
pub fn perturb_boundary_edge<R: Rng + ?Sized>(rng: &mut R, graph: &WeightedBoundaryGraph) -> Result<WeightedBoundaryGraph> {
    let cross: Vec<(usize, usize, f64)> =
        graph.edges().into_iter().filter(|&(a, b, _)| graph.is_boundary(a) != graph.is_boundary(b)).collect();
    let &(a, b, w) = cross.choose(rng).ok_or_else(|| Error::InvalidArgument("no boundary edges".into()))?;
    let mut weights = graph.weights().clone();
    let factor = rng.random_range(1.1..1.6);
    weights[(a, b)] = w * factor;
    weights[(b, a)] = w * factor;
    WeightedBoundaryGraph::from_parts(graph.measure().to_vec(), weights, graph.boundary())
}

/// Join one boundary vertex to an interior vertex it was not adjacent to.
pub fn add_second_interior_neighbor<R: Rng + ?Sized>(
    rng: &mut R,
    graph: &WeightedBoundaryGraph,
) -> Result<WeightedBoundaryGraph> {
    let candidates: Vec<(usize, usize)> = graph
        .boundary()
        .iter()
        .flat_map(|&x| graph.interior().iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| graph.weight(x, y) == 0.0)
        .collect();
    let &(x, y) = candidates.choose(rng).ok_or_else(|| Error::InvalidArgument("boundary is already complete".into()))?;
    let mut weights: DMatrix<f64> = graph.weights().clone();
    let w = lognormal(rng, 0.5);
    weights[(x, y)] = w;
    weights[(y, x)] = w;
    WeightedBoundaryGraph::from_parts(graph.measure().to_vec(), weights, graph.boundary())
}

/// Random constant-`ρ` graph satisfying the Neumann-vs-Laplacian equality
/// conditions: `V_B < V_Ω` and `μ_|Ω|(Ω) ≤ ρ (V_Ω - V_B)` (`ρ V_Ω` when
/// `|B| = 1`).
pub fn neumann_laplacian_positive<R: Rng + ?Sized>(rng: &mut R) -> Result<WeightedBoundaryGraph> {
    let scale = rng.random_range(0.2..0.9);
    neumann_laplacian_random(rng, scale)
}

/// Like [`neumann_laplacian_positive`], but either one boundary edge breaks
/// the factorization or the interior weights exceed the threshold.
pub fn neumann_laplacian_negative<R: Rng + ?Sized>(rng: &mut R) -> Result<WeightedBoundaryGraph> {
    if rng.random_bool(0.5) {
        let scale = rng.random_range(0.2..0.9);
        let g = neumann_laplacian_random(rng, scale)?;
        perturb_boundary_edge(rng, &g)
    } else {
        let scale = rng.random_range(1.2..3.0);
        neumann_laplacian_random(rng, scale)
    }
}

fn neumann_laplacian_random<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Result<WeightedBoundaryGraph> {
    let no = rng.random_range(2..=5);
    let nb = rng.random_range(1..=4);
    let interior: Vec<f64> = (0..no).map(|_| lognormal(rng, 0.5)).collect();
    let raw: Vec<f64> = (0..nb).map(|_| lognormal(rng, 0.5)).collect();
    let ratio = rng.random_range(0.2..0.8) * interior.iter().sum::<f64>() / raw.iter().sum::<f64>();
    let boundary: Vec<f64> = raw.iter().map(|b| b * ratio).collect();
    let rho = lognormal(rng, 0.5);
    let (vo, vb): (f64, f64) = (interior.iter().sum(), boundary.iter().sum());
    let threshold = if nb == 1 { rho * vo } else { rho * (vo - vb) };
    let edges = random_interior_edges(rng, no);
    let top = *interior_spectrum(&interior, &edges)?.last().expect("nonempty interior");
    let edges = scaled(&edges, scale * threshold / top);
    rho_factorized(&interior, &boundary, &vec![rho; nb], &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn recipes_build_valid_graphs() {
        for (j, b, o) in [(1, 2, 3), (2, 3, 2), (3, 3, 3)] {
            let p = RecipeParams::new(j, b, o);
            for g in [neumann_laplacian_recipe(p).unwrap(), laplacian_dirichlet_recipe(p).unwrap()] {
                assert!(g.validate().is_ok());
                assert_eq!(g.interior_component_count(), j);
            }
        }
        let vol = neumann_laplacian_recipe(RecipeParams::new(1, 2, 3)).unwrap().volumes();
        assert!((vol.boundary - vol.interior / 2.0).abs() < 1e-12);
        assert!(neumann_laplacian_recipe(RecipeParams::new(4, 2, 3)).is_err());
        assert!(laplacian_dirichlet_recipe(RecipeParams { rho: -1.0, ..RecipeParams::new(1, 1, 1) }).is_err());
    }

    #[test]
    fn random_families_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = constant_boundary_degree_positive(&mut rng).unwrap();
            assert!(g.validate().is_ok());
            let d = g.boundary_degrees();
            assert!(d.iter().all(|v| (v - d[0]).abs() < 1e-12));
            assert!(perturb_boundary_edge(&mut rng, &g).unwrap().validate().is_ok());

            let g = one_neighbor_positive(&mut rng).unwrap();
            assert!(g.validate().is_ok());
            assert!(add_second_interior_neighbor(&mut rng, &g).unwrap().validate().is_ok());

            assert!(dirichlet_neumann_positive(&mut rng).unwrap().validate().is_ok());
            assert!(neumann_laplacian_positive(&mut rng).unwrap().validate().is_ok());
            assert!(neumann_laplacian_negative(&mut rng).unwrap().validate().is_ok());
        }
    }
}
