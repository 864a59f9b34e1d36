//! Exact phase-one simplex used to decide convex-hull membership.
//!
//! The only question ever asked here is feasibility of
//! `sum_i l_i p_i = q, sum_i l_i = 1, l >= 0`, so the solver minimises the sum
//! of artificial variables and reports whether it reaches zero. Pivoting
//! follows Bland's rule, which rules out cycling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Is `target` a convex combination of `generators`?
///
/// Every generator and the target must have the same length; an empty
/// generator list is never feasible.
pub fn in_convex_hull(generators: &[Vec<BigInt>], target: &[BigRational]) -> bool {
    if generators.is_empty() {
        return false;
    }
    let dim = target.len();
    debug_assert!(generators.iter().all(|g| g.len() == dim));

    let vars = generators.len();
    let rows = dim + 1;
    // Columns: structural variables, then one artificial per row, then rhs.
    let width = vars + rows + 1;
    let rhs = width - 1;
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for r in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        for (j, g) in generators.iter().enumerate() {
            row[j] = if r < dim {
                BigRational::from_integer(g[r].clone())
            } else {
                BigRational::from_integer(BigInt::from(1))
            };
        }
        row[rhs] = if r < dim {
            target[r].clone()
        } else {
            BigRational::from_integer(BigInt::from(1))
        };
        if row[rhs].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[vars + r] = BigRational::from_integer(BigInt::from(1));
        tableau.push(row);
    }
    // Objective row: reduced costs of phase one, i.e. minus the column sums.
    let mut objective = vec![BigRational::zero(); width];
    for row in &tableau {
        for j in 0..vars {
            objective[j] -= &row[j];
        }
        objective[rhs] -= &row[rhs];
    }
    tableau.push(objective);
    let mut basis: Vec<usize> = (vars..vars + rows).collect();

    loop {
        let obj = &tableau[rows];
        let entering = (0..vars + rows).find(|&j| obj[j].is_negative());
        let Some(entering) = entering else { break };

        let mut leaving: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            let a = &tableau[r][entering];
            if !a.is_positive() {
                continue;
            }
            let ratio = &tableau[r][rhs] / a;
            let better = match &leaving {
                None => true,
                Some((best_row, best)) => {
                    ratio < *best || (ratio == *best && basis[r] < basis[*best_row])
                }
            };
            if better {
                leaving = Some((r, ratio));
            }
        }
        // Phase one is bounded below by zero, so an entering column always
        // has a positive entry.
        let Some((pivot_row, _)) = leaving else { break };
        pivot(&mut tableau, pivot_row, entering);
        basis[pivot_row] = entering;
    }
    tableau[rows][rhs].is_zero()
}

fn pivot(tableau: &mut [Vec<BigRational>], pivot_row: usize, col: usize) {
    let p = tableau[pivot_row][col].clone();
    for v in tableau[pivot_row].iter_mut() {
        *v = &*v / &p;
    }
    let pivot_vals = tableau[pivot_row].clone();
    for (r, row) in tableau.iter_mut().enumerate() {
        if r == pivot_row || row[col].is_zero() {
            continue;
        }
        let factor = row[col].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_vals) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
}
