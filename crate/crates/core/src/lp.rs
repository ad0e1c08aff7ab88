//! Small dense linear programs: two-phase tableau simplex with Bland's rule.

use serde::Serialize;

pub const LP_TOLERANCE: f64 = 1e-10;
const MAX_PIVOTS: usize = 100_000;

/// `minimize c·z + offset  subject to  A z ≤ b,  z ≥ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub objective_offset: f64,
    pub constraints: Vec<Vec<f64>>,
    pub bounds: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpSolution {
    Optimal { value: f64, point: Vec<f64> },
    Infeasible,
    Unbounded,
}

impl LpSolution {
    pub fn value(&self) -> Option<f64> {
        match self {
            LpSolution::Optimal { value, .. } => Some(*value),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn variable_count(&self) -> usize {
        self.objective.len()
    }

    pub fn is_feasible(&self, z: &[f64], tol: f64) -> bool {
        z.iter().all(|&v| v >= -tol)
            && self
                .constraints
                .iter()
                .zip(&self.bounds)
                .all(|(row, &b)| row.iter().zip(z).map(|(a, v)| a * v).sum::<f64>() <= b + tol)
    }

    pub fn evaluate(&self, z: &[f64]) -> f64 {
        self.objective_offset + self.objective.iter().zip(z).map(|(c, v)| c * v).sum::<f64>()
    }

    /// The dual `minimize b·y s.t. -Aᵀ y ≤ c, y ≥ 0`, whose optimum is the
    /// negated primal optimum (offset aside).
    pub fn dual(&self) -> LinearProgram {
        let n = self.variable_count();
        let m = self.constraints.len();
        LinearProgram {
            objective: self.bounds.clone(),
            objective_offset: 0.0,
            constraints: (0..n).map(|j| (0..m).map(|i| -self.constraints[i][j]).collect()).collect(),
            bounds: self.objective.clone(),
        }
    }
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    columns: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.rows[i][self.columns]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col];
        for v in self.rows[row].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let factor = r[col];
            if factor != 0.0 {
                for (v, pv) in r.iter_mut().zip(&pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Minimize `cost · x` over columns `0..allowed` from a feasible basis.
    /// Returns `false` when unbounded.
    fn optimize(&mut self, cost: &[f64], allowed: usize) -> bool {
        for _ in 0..MAX_PIVOTS {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = cost[j] - self.rows.iter().zip(&self.basis).map(|(r, &b)| cost[b] * r[j]).sum::<f64>();
                reduced < -LP_TOLERANCE
            });
            let Some(col) = entering else { return true };
            let mut leaving: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][col];
                if a > LP_TOLERANCE {
                    let ratio = self.rhs(i) / a;
                    let better = match leaving {
                        None => true,
                        Some((k, best)) => {
                            ratio < best - LP_TOLERANCE || (ratio <= best + LP_TOLERANCE && self.basis[i] < self.basis[k])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leaving else { return false };
            self.pivot(row, col);
        }
        panic!("simplex exceeded {MAX_PIVOTS} pivots despite Bland's rule");
    }
}

pub fn solve(lp: &LinearProgram) -> LpSolution {
    let n = lp.variable_count();
    let m = lp.constraints.len();
    assert_eq!(lp.bounds.len(), m);
    let negative_rows: Vec<usize> = (0..m).filter(|&i| lp.bounds[i] < 0.0).collect();
    let artificials = negative_rows.len();
    let columns = n + m + artificials;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![0.0; columns + 1];
        let sign = if lp.bounds[i] < 0.0 { -1.0 } else { 1.0 };
        for (r, &c) in row.iter_mut().zip(&lp.constraints[i]).take(n) {
            *r = sign * c;
        }
        row[n + i] = sign;
        row[columns] = sign * lp.bounds[i];
        if let Some(k) = negative_rows.iter().position(|&r| r == i) {
            row[n + m + k] = 1.0;
            basis.push(n + m + k);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut tableau = Tableau { rows, basis, columns };

    if artificials > 0 {
        let mut phase_one = vec![0.0; columns];
        for c in phase_one.iter_mut().skip(n + m) {
            *c = 1.0;
        }
        tableau.optimize(&phase_one, columns);
        let infeasibility: f64 = (0..m).filter(|&i| tableau.basis[i] >= n + m).map(|i| tableau.rhs(i)).sum();
        if infeasibility > LP_TOLERANCE * (1.0 + lp.bounds.iter().map(|b| b.abs()).sum::<f64>()) {
            return LpSolution::Infeasible;
        }
        // drive remaining (zero-level) artificials out of the basis
        let mut i = 0;
        while i < tableau.rows.len() {
            if tableau.basis[i] >= n + m {
                match (0..n + m).find(|&j| tableau.rows[i][j].abs() > LP_TOLERANCE) {
                    Some(j) => tableau.pivot(i, j),
                    None => {
                        tableau.rows.remove(i);
                        tableau.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = vec![0.0; columns];
    cost[..n].copy_from_slice(&lp.objective);
    if !tableau.optimize(&cost, n + m) {
        return LpSolution::Unbounded;
    }
    let mut point = vec![0.0; n];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            point[b] = tableau.rhs(i);
        }
    }
    LpSolution::Optimal { value: lp.evaluate(&point), point }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(objective: &[f64], constraints: &[&[f64]], bounds: &[f64]) -> LinearProgram {
        LinearProgram {
            objective: objective.to_vec(),
            objective_offset: 0.0,
            constraints: constraints.iter().map(|r| r.to_vec()).collect(),
            bounds: bounds.to_vec(),
        }
    }

    #[test]
    fn lower_bound_through_phase_one() {
        // min x s.t. x ≥ 3
        let p = lp(&[1.0], &[&[-1.0]], &[-3.0]);
        assert!((solve(&p).value().unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn classic_maximization() {
        // max 3x + 5y s.t. x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18  → 36 at (2, 6)
        let p = lp(&[-3.0, -5.0], &[&[1.0, 0.0], &[0.0, 2.0], &[3.0, 2.0]], &[4.0, 12.0, 18.0]);
        match solve(&p) {
            LpSolution::Optimal { value, point } => {
                assert!((value + 36.0).abs() < 1e-12);
                assert!((point[0] - 2.0).abs() < 1e-12 && (point[1] - 6.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        let dual = solve(&p.dual()).value().unwrap();
        assert!((dual - 36.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(solve(&lp(&[1.0], &[&[1.0], &[-1.0]], &[1.0, -2.0])), LpSolution::Infeasible);
        assert_eq!(solve(&lp(&[-1.0], &[&[-1.0]], &[1.0])), LpSolution::Unbounded);
    }

    #[test]
    fn no_variables() {
        let p = LinearProgram { objective: vec![], objective_offset: 2.0, constraints: vec![], bounds: vec![] };
        assert_eq!(solve(&p).value(), Some(2.0));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook rule; Bland's rule terminates.
        let p = lp(
            &[-0.75, 20.0, -0.5, 6.0],
            &[&[0.25, -8.0, -1.0, 9.0], &[0.5, -12.0, -0.5, 3.0], &[0.0, 0.0, 1.0, 0.0]],
            &[0.0, 0.0, 1.0],
        );
        assert!((solve(&p).value().unwrap() + 1.25).abs() < 1e-12);
    }
}
