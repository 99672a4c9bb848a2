//! A minimal exact phase-1 simplex: find a non-negative solution of
//! `A x = b`, used only to extract convex-combination certificates (the
//! threshold decision itself never goes through here).

use num_traits::{One, Signed, Zero};

use crate::Rat;

/// Some x >= 0 with A x = b, or None when the system is infeasible.
/// Bland's rule, exact rational arithmetic.
pub(crate) fn nonneg_solution(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();

    // Tableau [A | I | b] with b made non-negative row by row.
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<Rat> = Vec::with_capacity(n + m + 1);
        for x in row {
            r.push(if flip { -x.clone() } else { x.clone() });
        }
        for j in 0..m {
            r.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        r.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Reduced cost of column j for minimizing the artificial sum: the sum
        // of the column over rows whose basic variable is artificial.
        let mut entering = None;
        'cols: for j in 0..n {
            if basis.contains(&j) {
                continue;
            }
            let mut red = Rat::zero();
            for (row, &bv) in t.iter().zip(basis.iter()) {
                if bv >= n {
                    red += &row[j];
                }
            }
            if red.is_positive() {
                entering = Some(j);
                break 'cols;
            }
        }
        let Some(j) = entering else { break };

        // Ratio test with Bland tie-breaking on the leaving basic variable.
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &t[i][n + m] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // Phase 1 is bounded below by zero, so no entering column can
            // be ratio-free; treat it as infeasible if it ever happens.
            return None;
        };

        let pval = t[pivot_row][j].clone();
        for x in t[pivot_row].iter_mut() {
            *x = &*x / &pval;
        }
        for i in 0..m {
            if i == pivot_row || t[i][j].is_zero() {
                continue;
            }
            let f = t[i][j].clone();
            let piv = t[pivot_row].clone();
            for (x, p) in t[i].iter_mut().zip(piv.iter()) {
                *x = &*x - &(&f * p);
            }
        }
        basis[pivot_row] = j;
    }

    // Feasible iff all artificial contributions vanish.
    let mut artificial_sum = Rat::zero();
    for (i, &bv) in basis.iter().enumerate() {
        if bv >= n {
            artificial_sum += &t[i][n + m];
        }
    }
    if !artificial_sum.is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][n + m].clone();
        }
    }
    Some(x)
}
