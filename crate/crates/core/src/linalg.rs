//! Dense symmetric eigensolver (cyclic Jacobi) and small helpers.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const JACOBI_RELATIVE_TOL: f64 = 1e-13;

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, matching `values`.
    pub vectors: DMatrix<f64>,
}

fn off_diagonal_norm(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

/// Diagonalize a symmetric matrix by cyclic Jacobi rotations.
///
/// Only the symmetric part of `matrix` is used. Iteration stops once the
/// off-diagonal Frobenius norm drops below `1e-13 * ‖A‖_F`; failure to get
/// there within [`JACOBI_MAX_SWEEPS`] sweeps is an error.
pub fn symmetric_eigen(matrix: &DMatrix<f64>) -> Result<SymmetricEigen> {
    let n = matrix.nrows();
    assert_eq!(n, matrix.ncols(), "eigensolver needs a square matrix");
    let mut a = (matrix + matrix.transpose()) * 0.5;
    let mut v = DMatrix::<f64>::identity(n, n);
    let threshold = JACOBI_RELATIVE_TOL * a.norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: equal eigenvalues keep solver order
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(SymmetricEigen { values, vectors })
}

/// `⟨u, v⟩_m = Σ u_i v_i m_i`.
pub fn weighted_dot(u: &DVector<f64>, v: &DVector<f64>, measure: &[f64]) -> f64 {
    u.iter().zip(v.iter()).zip(measure).map(|((a, b), m)| a * b * m).sum()
}

/// Orthonormal basis (columns) of the orthogonal complement of the unit
/// vector `direction` in `R^n`, built from a Householder reflection.
pub fn complement_basis(direction: &DVector<f64>) -> DMatrix<f64> {
    let n = direction.len();
    let unit = direction / direction.norm();
    let mut e1 = DVector::zeros(n);
    e1[0] = 1.0;
    // reflect `unit` onto ±e1; the remaining columns span the complement
    let sign = if unit[0] >= 0.0 { 1.0 } else { -1.0 };
    let h_vec = &unit + &e1 * sign;
    let h = DMatrix::<f64>::identity(n, n) - (&h_vec * h_vec.transpose()) * (2.0 / h_vec.norm_squared());
    h.columns(1, n - 1).into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: &DMatrix<f64>, e: &SymmetricEigen) -> f64 {
        let lambda = DMatrix::from_diagonal(&DVector::from_vec(e.values.clone()));
        (m * &e.vectors - &e.vectors * lambda).norm()
    }

    #[test]
    fn path_laplacian() {
        let m = DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]);
        let e = symmetric_eigen(&m).unwrap();
        for (got, want) in e.values.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-13);
        }
        assert!(residual(&m, &e) < 1e-12);
        assert!((e.vectors.transpose() * &e.vectors - DMatrix::identity(3, 3)).norm() < 1e-13);
    }

    #[test]
    fn zero_and_diagonal() {
        let e = symmetric_eigen(&DMatrix::zeros(4, 4)).unwrap();
        assert_eq!(e.values, vec![0.0; 4]);
        let e = symmetric_eigen(&DMatrix::from_diagonal(&DVector::from_vec(vec![3.0, -1.0, 2.0]))).unwrap();
        assert_eq!(e.values, vec![-1.0, 2.0, 3.0]);
        let e = symmetric_eigen(&DMatrix::zeros(0, 0)).unwrap();
        assert!(e.values.is_empty());
    }

    #[test]
    fn complement_is_orthonormal() {
        let d = DVector::from_vec(vec![1.0, 2.0, -0.5, 3.0]);
        let basis = complement_basis(&d);
        assert_eq!(basis.ncols(), 3);
        assert!((basis.transpose() * &basis - DMatrix::identity(3, 3)).norm() < 1e-14);
        assert!((basis.transpose() * &d).norm() < 1e-14);
    }
}
