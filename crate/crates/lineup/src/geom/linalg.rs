//! Exact integer linear algebra: rank by fraction-free elimination, gcd
//! canonicalization, dot products.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Int, Rat};

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn dot_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        if !x.is_zero() {
            acc += Rat::from(x.clone()) * y;
        }
    }
    acc
}

/// Divide by the gcd of the entries. The zero vector is left unchanged.
pub fn reduce_gcd(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g == Int::from(1) {
            return;
        }
    }
    if g.is_zero() || g == Int::from(1) {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Canonical form of an integer vector: gcd one, and the first nonzero entry
/// positive. The zero vector stays zero.
pub fn canonicalize(v: &[Int]) -> Vec<Int> {
    let mut out = v.to_vec();
    reduce_gcd(&mut out);
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -&*x;
            }
        }
    }
    out
}

/// Rank of an integer matrix, by fraction-free Gaussian elimination.
pub fn rank(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..m.len()).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pval = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..cols {
                row[c] = &row[c] * &pval - &prow[c] * &f;
            }
            reduce_gcd(row);
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of a rational matrix (scale every row to integers first).
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    let scaled: Vec<Vec<Int>> = rows.iter().map(|r| clear_denominators(r)).collect();
    rank(&scaled)
}

/// Multiply a rational row by the lcm of its denominators.
pub fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    let mut l = Int::from(1);
    for x in row {
        l = l.lcm(x.denom());
    }
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Dimension of the affine hull of a point set (0 for a single point).
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rank_rat(&diffs)
}
