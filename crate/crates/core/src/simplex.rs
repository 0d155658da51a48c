//! Phase-one simplex for feasibility of `A x = b, x >= 0`.
//!
//! Dense tableau, Bland's rule for both entering and leaving variables, so
//! the method terminates with exact scalars. Generic over [`LpScalar`]; with
//! `BigRational` every answer is exact.

use crate::scalar::LpScalar;

#[derive(Debug, Clone)]
pub struct FeasibilityProblem<F> {
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
    num_vars: usize,
}

impl<F: LpScalar> FeasibilityProblem<F> {
    /// Equality system `rows · x = rhs`; every row must have `num_vars` entries.
    pub fn new(num_vars: usize, rows: Vec<Vec<F>>, rhs: Vec<F>) -> Self {
        assert_eq!(rows.len(), rhs.len(), "row/rhs count mismatch");
        assert!(rows.iter().all(|r| r.len() == num_vars), "ragged constraint matrix");
        FeasibilityProblem { rows, rhs, num_vars }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    /// A nonnegative solution, if one exists.
    pub fn solve(&self) -> Option<Vec<F>> {
        let m = self.rows.len();
        let k = self.num_vars;
        let width = k + m + 1;
        let rhs_col = k + m;

        // Row i: [A_i | e_i | b_i] with b_i >= 0.
        let mut tableau: Vec<Vec<F>> = Vec::with_capacity(m);
        for (row, b) in self.rows.iter().zip(&self.rhs) {
            let flip = b.is_strictly_negative();
            let mut line = Vec::with_capacity(width);
            for a in row {
                line.push(if flip { -a.clone() } else { a.clone() });
            }
            line.extend((0..m).map(|_| F::zero()));
            line.push(if flip { -b.clone() } else { b.clone() });
            tableau.push(line);
        }
        for (i, line) in tableau.iter_mut().enumerate() {
            line[k + i] = F::one();
        }
        let mut basis: Vec<usize> = (k..k + m).collect();

        // Reduced costs of "minimize the sum of artificials"; last entry
        // holds minus the objective value.
        let mut cost = vec![F::zero(); width];
        for line in &tableau {
            for c in 0..k {
                cost[c] = cost[c].clone() - line[c].clone();
            }
            cost[rhs_col] = cost[rhs_col].clone() - line[rhs_col].clone();
        }

        while let Some(entering) = (0..k + m).find(|&c| cost[c].is_strictly_negative()) {
            let mut leaving: Option<(usize, F)> = None;
            for (i, line) in tableau.iter().enumerate() {
                let a = &line[entering];
                if !a.is_strictly_positive() {
                    continue;
                }
                let ratio = line[rhs_col].clone() / a.clone();
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && basis[i] < basis[*best])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            // Phase one is bounded below by zero, so some row always leaves.
            let (pivot_row, _) = leaving.expect("phase-one objective is bounded");
            pivot(&mut tableau, &mut cost, pivot_row, entering);
            basis[pivot_row] = entering;
        }

        if !cost[rhs_col].is_negligible() {
            return None;
        }
        let mut x = vec![F::zero(); k];
        for (i, &var) in basis.iter().enumerate() {
            if var < k {
                x[var] = tableau[i][rhs_col].clone();
            }
        }
        Some(x)
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }
}

fn pivot<F: LpScalar>(tableau: &mut [Vec<F>], cost: &mut [F], row: usize, col: usize) {
    let p = tableau[row][col].clone();
    for v in tableau[row].iter_mut() {
        *v = v.clone() / p.clone();
    }
    let pivot_line = tableau[row].clone();
    for (i, line) in tableau.iter_mut().enumerate() {
        if i == row || line[col].is_zero() {
            continue;
        }
        let factor = line[col].clone();
        for (v, pv) in line.iter_mut().zip(&pivot_line) {
            *v = v.clone() - factor.clone() * pv.clone();
        }
    }
    if !cost[col].is_zero() {
        let factor = cost[col].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_line) {
            *v = v.clone() - factor.clone() * pv.clone();
        }
    }
}
