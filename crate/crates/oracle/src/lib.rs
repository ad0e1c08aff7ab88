//! Brute-force reference computations for testing `boundary-spectra`.
//!
//! Nothing here shares code with the library: matrices are plain nested
//! vectors, and every routine takes the slow, obviously-correct route.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("dimension {dim} exceeds oracle limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("graph with {0} vertices is too large for cut enumeration")]
    TooLarge(usize),
}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub max_dimension: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { max_dimension: 6, sample_count: 64, seed: 0x5eed }
    }
}

pub type Matrix = Vec<Vec<f64>>;

/// Number of eigenvalues of the symmetric `s` below `t`: the number of
/// negative pivots in a Bunch-Parlett factorization of `s - tI`, which has
/// the same inertia (Sylvester's law). A 2×2 pivot is used when no diagonal
/// entry dominates; it always carries one negative eigenvalue.
fn count_below(s: &Matrix, t: f64) -> usize {
    let n = s.len();
    let mut a: Matrix = s.iter().enumerate().map(|(i, r)| r.iter().enumerate().map(|(j, &v)| if i == j { v - t } else { v }).collect()).collect();
    let alpha = (1.0 + 17f64.sqrt()) / 8.0;
    let mut active: Vec<usize> = (0..n).collect();
    let mut negative = 0;
    while !active.is_empty() {
        let (mut di, mut dmax) = (active[0], 0.0f64);
        let (mut oi, mut oj, mut omax) = (active[0], active[0], 0.0f64);
        for (p, &i) in active.iter().enumerate() {
            if a[i][i].abs() > dmax {
                (di, dmax) = (i, a[i][i].abs());
            }
            for &j in &active[p + 1..] {
                if a[i][j].abs() > omax {
                    (oi, oj, omax) = (i, j, a[i][j].abs());
                }
            }
        }
        if dmax == 0.0 && omax == 0.0 {
            break;
        }
        if dmax >= alpha * omax {
            let pivot = a[di][di];
            if pivot < 0.0 {
                negative += 1;
            }
            active.retain(|&k| k != di);
            for &j in &active {
                for &k in &active {
                    a[j][k] -= a[j][di] * a[di][k] / pivot;
                }
            }
        } else {
            let (p, q) = (oi, oj);
            let det = a[p][p] * a[q][q] - a[p][q] * a[q][p];
            negative += 1;
            active.retain(|&k| k != p && k != q);
            let inv = [[a[q][q] / det, -a[p][q] / det], [-a[q][p] / det, a[p][p] / det]];
            let old = a.clone();
            for &j in &active {
                for &k in &active {
                    let left = [old[j][p], old[j][q]];
                    let right = [old[p][k], old[q][k]];
                    let mut update = 0.0;
                    for r in 0..2 {
                        for c in 0..2 {
                            update += left[r] * inv[r][c] * right[c];
                        }
                    }
                    a[j][k] -= update;
                }
            }
        }
    }
    negative
}

/// Eigenvalues, ascending, of the matrix `a` self-adjoint in `⟨u,v⟩ = Σ m u v`:
/// bisection on the eigenvalue count of `M^{1/2} A M^{-1/2}`.
pub fn eigen_bruteforce(config: &OracleConfig, a: &Matrix, measure: &[f64]) -> Result<Vec<f64>> {
    let n = a.len();
    if n > config.max_dimension {
        return Err(OracleError::DimensionTooLarge { dim: n, max: config.max_dimension });
    }
    let s: Matrix = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (a[i][j] * (measure[i] / measure[j]).sqrt() + a[j][i] * (measure[j] / measure[i]).sqrt())).collect())
        .collect();
    // Gershgorin enclosure
    let radius = |i: usize| s[i].iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.abs()).sum::<f64>();
    let lo = (0..n).map(|i| s[i][i] - radius(i)).fold(f64::INFINITY, f64::min) - 1.0;
    let hi = (0..n).map(|i| s[i][i] + radius(i)).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    Ok((0..n)
        .map(|k| {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if count_below(&s, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect())
}

/// Solve the square system by Gaussian elimination with partial pivoting.
fn solve_square(mut a: Matrix, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale = a.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1.0);
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))?;
        if a[p][k].abs() < 1e-11 * scale {
            return None;
        }
        a.swap(k, p);
        b.swap(k, p);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            let pivot_row = a[k].clone();
            for (x, p) in a[i][k..n].iter_mut().zip(&pivot_row[k..n]) {
                *x -= f * p;
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let tail: f64 = (k + 1..n).map(|j| a[k][j] * x[j]).sum();
        x[k] = (b[k] - tail) / a[k][k];
    }
    Some(x)
}

fn subsets(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if chosen.len() == k {
            visit(chosen);
            return;
        }
        for i in start..n {
            if n - i < k - chosen.len() {
                break;
            }
            chosen.push(i);
            go(i + 1, n, k, chosen, visit);
            chosen.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), visit);
}

/// Vertices of `{z ≥ 0, Az ≤ b, Σz = 1 (if normalized)}`.
fn polytope_vertices(a: &Matrix, b: &[f64], n: usize, normalized: bool, tol: f64) -> Vec<Vec<f64>> {
    // rows: Az ≤ b, then -z ≤ 0
    let mut rows: Matrix = a.clone();
    let mut rhs: Vec<f64> = b.to_vec();
    for i in 0..n {
        let mut r = vec![0.0; n];
        r[i] = -1.0;
        rows.push(r);
        rhs.push(0.0);
    }
    let active = if normalized { n - 1 } else { n };
    let mut found = Vec::new();
    subsets(rows.len(), active, &mut |set| {
        let mut sys: Matrix = set.iter().map(|&i| rows[i].clone()).collect();
        let mut sys_rhs: Vec<f64> = set.iter().map(|&i| rhs[i]).collect();
        if normalized {
            sys.push(vec![1.0; n]);
            sys_rhs.push(1.0);
        }
        if let Some(z) = solve_square(sys, sys_rhs) {
            let feasible = rows.iter().zip(&rhs).all(|(r, &bound)| r.iter().zip(&z).map(|(p, q)| p * q).sum::<f64>() <= bound + tol);
            if feasible {
                found.push(z);
            }
        }
    });
    found
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

/// `min c·z + offset` subject to `Az ≤ b`, `z ≥ 0`, by enumerating every
/// basic solution. Unboundedness is detected by enumerating the vertices of
/// the normalized recession cone `{d ≥ 0, Ad ≤ 0, Σd = 1}`.
pub fn lp_bruteforce(objective: &[f64], offset: f64, a: &Matrix, b: &[f64]) -> Result<f64> {
    let n = objective.len();
    if n > 12 || a.len() > 40 {
        return Err(OracleError::DimensionTooLarge { dim: n.max(a.len()), max: 12 });
    }
    let tol = 1e-9;
    if n == 0 {
        return if b.iter().all(|&v| v >= -tol) { Ok(offset) } else { Err(OracleError::Infeasible) };
    }
    let vertices = polytope_vertices(a, b, n, false, tol);
    if vertices.is_empty() {
        return Err(OracleError::Infeasible);
    }
    let zero = vec![0.0; b.len()];
    if polytope_vertices(a, &zero, n, true, tol).iter().any(|d| dot(objective, d) < -tol) {
        return Err(OracleError::Unbounded);
    }
    Ok(vertices.iter().map(|z| dot(objective, z)).fold(f64::INFINITY, f64::min) + offset)
}

/// Minimum number of edges crossing a proper bipartition of `0..n`.
pub fn cut_bruteforce(n: usize, edges: &[(usize, usize)]) -> Result<usize> {
    if n > 8 {
        return Err(OracleError::TooLarge(n));
    }
    if n < 2 {
        return Ok(0);
    }
    // vertex n-1 always on the zero side, so each bipartition is seen once
    Ok((1u32..1 << (n - 1))
        .map(|mask| edges.iter().filter(|&&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1)).count())
        .min()
        .expect("at least one bipartition"))
}

/// `Δf(v) = (1/m_v) Σ_u w_vu (f(u) - f(v))`.
fn laplace(measure: &[f64], w: &Matrix, f: &[f64], v: usize) -> f64 {
    (0..f.len()).map(|u| w[v][u] * (f[u] - f[v])).sum::<f64>() / measure[v]
}

fn carre(measure: &[f64], w: &Matrix, f: &[f64], g: &[f64], v: usize) -> f64 {
    (0..f.len()).map(|u| w[v][u] * (f[u] - f[v]) * (g[u] - g[v])).sum::<f64>() / (2.0 * measure[v])
}

/// `(Γ₂(f)(x) - (1/n)(Δf(x))², Γ(f)(x))` straight from the definitions.
pub fn bakry_emery_terms(measure: &[f64], w: &Matrix, x: usize, inverse_dimension: f64, f: &[f64]) -> (f64, f64) {
    let n = f.len();
    let lap: Vec<f64> = (0..n).map(|v| laplace(measure, w, f, v)).collect();
    let gamma: Vec<f64> = (0..n).map(|v| carre(measure, w, f, f, v)).collect();
    let gamma2 = 0.5 * laplace(measure, w, &gamma, x) - carre(measure, w, f, &lap, x);
    (gamma2 - inverse_dimension * lap[x] * lap[x], gamma[x])
}

/// Smallest value of `(Γ₂(f) - (1/n)(Δf)²)/Γ(f)` at `x` found by random
/// starts followed by steepest descent with exact line search.
/// `inverse_dimension` is `1/n` (0 for `n = ∞`).
pub fn bakry_emery_sampled(config: &OracleConfig, measure: &[f64], w: &Matrix, x: usize, inverse_dimension: f64) -> f64 {
    let size = measure.len();
    // quadratic forms by polarization over the indicator basis
    let unit = |a: usize| {
        let mut e = vec![0.0; size];
        e[a] = 1.0;
        e
    };
    let terms = |f: &[f64]| bakry_emery_terms(measure, w, x, inverse_dimension, f);
    let mut num = vec![vec![0.0; size]; size];
    let mut den = vec![vec![0.0; size]; size];
    for a in 0..size {
        for b in 0..size {
            let ea = unit(a);
            let eb = unit(b);
            let sum: Vec<f64> = ea.iter().zip(&eb).map(|(p, q)| p + q).collect();
            let (ns, ds) = terms(&sum);
            let (na, da) = terms(&ea);
            let (nb, db) = terms(&eb);
            num[a][b] = 0.5 * (ns - na - nb);
            den[a][b] = 0.5 * (ds - da - db);
        }
    }
    let apply = |m: &Matrix, f: &[f64]| -> Vec<f64> { m.iter().map(|r| dot(r, f)).collect() };
    let quotient = |f: &[f64]| {
        let d = dot(f, &apply(&den, f));
        (d > 1e-14).then(|| dot(f, &apply(&num, f)) / d)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut best = f64::INFINITY;
    for _ in 0..config.sample_count {
        let mut f: Vec<f64> = (0..size).map(|v| if v == x { 0.0 } else { rng.random_range(-1.0..1.0) }).collect();
        let Some(mut q) = quotient(&f) else { continue };
        for _ in 0..400 {
            let nf = apply(&num, &f);
            let df = apply(&den, &f);
            let denom = dot(&f, &df);
            let mut grad: Vec<f64> = nf.iter().zip(&df).map(|(a, b)| (a - q * b) / denom).collect();
            grad[x] = 0.0;
            if dot(&grad, &grad).sqrt() < 1e-13 {
                break;
            }
            // along f + s d the quotient is (a + 2bs + cs²)/(α + 2βs + γs²)
            let d: Vec<f64> = grad.iter().map(|g| -g).collect();
            let nd = apply(&num, &d);
            let dd = apply(&den, &d);
            let (a, b, c) = (dot(&f, &nf), dot(&f, &nd), dot(&d, &nd));
            let (al, be, ga) = (denom, dot(&f, &dd), dot(&d, &dd));
            let (qa, qb, qc) = (c * be - b * ga, c * al - a * ga, b * al - a * be);
            let mut roots = Vec::new();
            if qa.abs() > 1e-300 {
                let disc = qb * qb - 4.0 * qa * qc;
                if disc >= 0.0 {
                    roots.push((-qb + disc.sqrt()) / (2.0 * qa));
                    roots.push((-qb - disc.sqrt()) / (2.0 * qa));
                }
            } else if qb.abs() > 1e-300 {
                roots.push(-qc / qb);
            }
            let step = roots
                .into_iter()
                .filter_map(|s| {
                    let g: Vec<f64> = f.iter().zip(&d).map(|(p, q)| p + s * q).collect();
                    quotient(&g).map(|v| (v, g))
                })
                .min_by(|a, b| a.0.total_cmp(&b.0));
            match step {
                Some((v, g)) if v < q => {
                    let norm = dot(&g, &g).sqrt();
                    f = g.iter().map(|v| v / norm).collect();
                    q = v;
                }
                _ => break,
            }
        }
        best = best.min(q);
    }
    best
}
