//! Double description: exact conversion between H- and V-representations of
//! polyhedral cones over the integers.
//!
//! The state processes halfspaces incrementally, maintaining the extreme rays
//! and a lineality basis of the intersection so far. Lineality is consumed
//! eagerly: while some basis vector is not orthogonal to the incoming row,
//! the whole generator set is projected along it. All arithmetic is integer;
//! every ray is gcd-reduced as soon as it is produced.

use num_traits::{Signed, Zero};

use super::linalg::canonicalize;
use super::linalg::{dot, rank, reduce_gcd};
use crate::Int;

/// Cone in H-representation: `{ y : <row_i, y> >= 0 for all i }`.
#[derive(Clone, Debug)]
pub struct ConeH {
    pub ambient_dim: usize,
    pub rows: Vec<Vec<Int>>,
}

impl ConeH {
    pub fn new(ambient_dim: usize, rows: Vec<Vec<Int>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ambient_dim));
        ConeH { ambient_dim, rows }
    }

    /// The fundamental chamber: y_1 >= y_2 >= ... >= y_d.
    pub fn chamber(d: usize) -> Self {
        let mut rows = Vec::with_capacity(d.saturating_sub(1));
        for i in 0..d.saturating_sub(1) {
            let mut row = vec![Int::zero(); d];
            row[i] = Int::from(1);
            row[i + 1] = Int::from(-1);
            rows.push(row);
        }
        ConeH::new(d, rows)
    }

    pub fn contains(&self, y: &[Int]) -> bool {
        self.rows.iter().all(|row| !dot(row, y).is_negative())
    }

    /// Debug dump as a JSON array of integer rows.
    pub fn debug_json(&self) -> String {
        format!("{{\"rows\":{}}}", json_rows(&self.rows))
    }
}

/// Cone in V-representation: conical hull of `rays` plus the span of
/// `lineality`. Rays are canonical (gcd one, reduced modulo the lineality)
/// and sorted; no ray is a non-negative combination of the others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeV {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl ConeV {
    pub fn dim(&self) -> usize {
        let mut all = self.rays.clone();
        all.extend(self.lineality.iter().cloned());
        rank(&all)
    }

    /// Debug dump as JSON arrays of integer rays and lineality vectors.
    pub fn debug_json(&self) -> String {
        format!(
            "{{\"rays\":{},\"lineality\":{}}}",
            json_rows(&self.rays),
            json_rows(&self.lineality)
        )
    }
}

fn json_rows(rows: &[Vec<Int>]) -> String {
    let outer: Vec<String> = rows
        .iter()
        .map(|r| {
            let inner: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("[{}]", inner.join(","))
        })
        .collect();
    format!("[{}]", outer.join(","))
}

#[derive(Clone, Debug, Default)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    fn all_below(n: usize) -> Self {
        let mut s = BitSet::default();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    fn intersection(&self, other: &Self) -> Self {
        let n = self.words.len().min(other.words.len());
        BitSet {
            words: (0..n).map(|i| self.words[i] & other.words[i]).collect(),
        }
    }

    fn is_subset(&self, other: &Self) -> bool {
        for (i, &w) in self.words.iter().enumerate() {
            let o = other.words.get(i).copied().unwrap_or(0);
            if w & !o != 0 {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<Int>,
    zero: BitSet,
}

/// Incremental double description state.
#[derive(Clone, Debug)]
pub struct DdState {
    dim: usize,
    rows: Vec<Vec<Int>>,
    rays: Vec<Ray>,
    lineality: Vec<Vec<Int>>,
}

impl DdState {
    /// The full ambient space (no constraints yet).
    pub fn full_space(dim: usize) -> Self {
        let lineality = (0..dim)
            .map(|i| {
                let mut v = vec![Int::zero(); dim];
                v[i] = Int::from(1);
                v
            })
            .collect();
        DdState {
            dim,
            rows: Vec::new(),
            rays: Vec::new(),
            lineality,
        }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Intersect the current cone with `{ y : <row, y> >= 0 }`.
    pub fn push_row(&mut self, row: Vec<Int>) {
        debug_assert_eq!(row.len(), self.dim);
        let idx = self.rows.len();
        if row.iter().all(|x| x.is_zero()) {
            self.rows.push(row);
            for ray in self.rays.iter_mut() {
                ray.zero.insert(idx);
            }
            return;
        }

        // Stage 1: consume a lineality vector if one sees the row.
        if let Some(pos) = self.lineality.iter().position(|l| !dot(l, &row).is_zero()) {
            let mut pivot = self.lineality.swap_remove(pos);
            let pval = dot(&pivot, &row);
            if pval.is_negative() {
                for x in pivot.iter_mut() {
                    *x = -&*x;
                }
            }
            let pval = dot(&pivot, &row);
            for l in self.lineality.iter_mut() {
                let c = dot(l, &row);
                if !c.is_zero() {
                    for (a, b) in l.iter_mut().zip(pivot.iter()) {
                        *a = &*a * &pval - b * &c;
                    }
                    reduce_gcd(l);
                }
            }
            for ray in self.rays.iter_mut() {
                let c = dot(&ray.v, &row);
                if !c.is_zero() {
                    for (a, b) in ray.v.iter_mut().zip(pivot.iter()) {
                        *a = &*a * &pval - b * &c;
                    }
                    reduce_gcd(&mut ray.v);
                }
                ray.zero.insert(idx);
            }
            let mut v = pivot;
            reduce_gcd(&mut v);
            self.rays.push(Ray {
                v,
                zero: BitSet::all_below(idx),
            });
            self.rows.push(row);
            return;
        }

        // Stage 2: ordinary ray split.
        let values: Vec<Int> = self.rays.iter().map(|r| dot(&r.v, &row)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (ray, v) in self.rays.iter_mut().zip(values.iter()) {
                if v.is_zero() {
                    ray.zero.insert(idx);
                }
            }
            self.rows.push(row);
            return;
        }

        let pos: Vec<usize> = (0..self.rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let neg: Vec<usize> = (0..self.rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = self.rays[p].zero.intersection(&self.rays[n].zero);
                let adjacent = !self
                    .rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != n && common.is_subset(&r.zero));
                if !adjacent {
                    continue;
                }
                let (a_p, a_n) = (&values[p], &values[n]);
                let mut v: Vec<Int> = self.rays[p]
                    .v
                    .iter()
                    .zip(self.rays[n].v.iter())
                    .map(|(x, y)| x * &(-a_n.clone()) + y * a_p)
                    .collect();
                reduce_gcd(&mut v);
                let mut zero = common;
                zero.insert(idx);
                fresh.push(Ray { v, zero });
            }
        }

        let mut kept: Vec<Ray> = Vec::new();
        for (i, ray) in self.rays.drain(..).enumerate() {
            if values[i].is_negative() {
                continue;
            }
            let mut ray = ray;
            if values[i].is_zero() {
                ray.zero.insert(idx);
            }
            kept.push(ray);
        }
        kept.extend(fresh);
        self.rays = kept;
        self.rows.push(row);
    }

    /// A point with `<row, y> > 0` for as many rows as the cone allows: the
    /// sum of all extreme rays. Lineality directions are orthogonal to every
    /// row, so they cannot help strictness.
    pub fn sum_of_rays(&self) -> Vec<Int> {
        let mut acc = vec![Int::zero(); self.dim];
        for ray in &self.rays {
            for (a, b) in acc.iter_mut().zip(ray.v.iter()) {
                *a += b;
            }
        }
        reduce_gcd(&mut acc);
        acc
    }

    /// True iff some point satisfies every processed row strictly.
    pub fn has_strict_point(&self) -> bool {
        let y = self.sum_of_rays();
        self.rows.iter().all(|row| dot(row, &y).is_positive())
    }

    pub fn dim(&self) -> usize {
        let mut all: Vec<Vec<Int>> = self.rays.iter().map(|r| r.v.clone()).collect();
        all.extend(self.lineality.iter().cloned());
        rank(&all)
    }

    /// Canonical V-representation: echelonized lineality basis, rays reduced
    /// modulo the lineality, everything gcd-one and sorted.
    pub fn cone_v(&self) -> ConeV {
        let lineality = echelon_basis(&self.lineality);
        let mut rays: Vec<Vec<Int>> = self
            .rays
            .iter()
            .map(|r| {
                let mut v = r.v.clone();
                reduce_modulo(&mut v, &lineality);
                v
            })
            .collect();
        rays.sort();
        rays.dedup();
        ConeV { rays, lineality }
    }
}

/// Fraction-free reduced row echelon basis with positive pivots.
pub fn echelon_basis(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut basis: Vec<Vec<Int>> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        reduce_modulo(&mut v, &basis);
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(canonicalize(&v));
            basis.sort_by_key(|b| b.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX));
            // Back-substitute so each pivot column is zero in the other rows.
            let snapshot = basis.clone();
            for b in basis.iter_mut() {
                let own_pivot = b.iter().position(|x| !x.is_zero());
                for other in &snapshot {
                    if other == b {
                        continue;
                    }
                    let p = other
                        .iter()
                        .position(|x| !x.is_zero())
                        .unwrap_or(usize::MAX);
                    if own_pivot != Some(p) {
                        reduce_by_pivot(b, other, p);
                    }
                }
                *b = canonicalize(b);
            }
        }
    }
    basis
}

fn reduce_by_pivot(v: &mut [Int], basis_vec: &[Int], pivot: usize) {
    if pivot == usize::MAX || v[pivot].is_zero() {
        return;
    }
    let pval = basis_vec[pivot].clone();
    debug_assert!(pval.is_positive());
    let c = v[pivot].clone();
    for (a, b) in v.iter_mut().zip(basis_vec.iter()) {
        *a = &*a * &pval - b * &c;
    }
    reduce_gcd(v);
}

/// Reduce `v` modulo the span of `basis` (assumed echelonized with positive
/// pivots); the multiplier applied to `v` is always positive, so ray
/// orientation is preserved.
pub fn reduce_modulo(v: &mut [Int], basis: &[Vec<Int>]) {
    for b in basis {
        let pivot = b.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
        if pivot != usize::MAX {
            reduce_by_pivot(v, b, pivot);
        }
    }
    reduce_gcd(v);
}

/// Convert an H-representation to its canonical V-representation.
///
/// Rows are deduplicated and inserted sorted by number of zero entries
/// (descending); the result does not depend on the caller's row order.
pub fn dd_h_to_v(cone: &ConeH) -> ConeV {
    // Rows are gcd-reduced but never sign-flipped: the sign is the halfspace.
    let mut rows: Vec<Vec<Int>> = cone
        .rows
        .iter()
        .map(|r| {
            let mut v = r.clone();
            reduce_gcd(&mut v);
            v
        })
        .collect();
    rows.sort();
    rows.dedup();
    rows.sort_by_key(|r| {
        let zeros = r.iter().filter(|x| x.is_zero()).count();
        (std::cmp::Reverse(zeros), r.clone())
    });
    let mut state = DdState::full_space(cone.ambient_dim);
    for row in rows {
        state.push_row(row);
    }
    state.cone_v()
}

/// Dimension of the cone `{ y : rows >= 0 }`.
pub fn cone_dim(cone: &ConeH) -> usize {
    dd_h_to_v(cone).dim()
}

/// Re-derive an H-representation from a V-representation by converting the
/// polar cone: the dual's rays are the irredundant rows, its lineality spans
/// the orthogonal complement of the cone.
pub fn rederive_h(v: &ConeV) -> ConeH {
    let dim = v
        .rays
        .first()
        .or_else(|| v.lineality.first())
        .map(|r| r.len())
        .unwrap_or(0);
    let mut rows: Vec<Vec<Int>> = v.rays.clone();
    for l in &v.lineality {
        rows.push(l.clone());
        rows.push(l.iter().map(|x| -x).collect());
    }
    let dual = dd_h_to_v(&ConeH::new(dim, rows));
    let mut out = dual.rays;
    for l in &dual.lineality {
        out.push(l.clone());
        out.push(l.iter().map(|x| -x).collect());
    }
    ConeH::new(dim, out)
}

/// A rational point of the cone satisfying every row non-strictly and every
/// flagged row strictly, if one exists. Built as the sum of the extreme rays:
/// any point of the cone is a non-negative combination of them (plus
/// lineality, which is orthogonal to all rows), so strict feasibility of the
/// flagged rows is witnessed by the sum or by nothing.
pub fn strict_interior_point(cone: &ConeH, strict_rows: &[usize]) -> Option<Vec<Int>> {
    let v = dd_h_to_v(cone);
    let mut y = vec![Int::zero(); cone.ambient_dim];
    for ray in &v.rays {
        for (a, b) in y.iter_mut().zip(ray.iter()) {
            *a += b;
        }
    }
    reduce_gcd(&mut y);
    if !cone.contains(&y) {
        return None;
    }
    for &i in strict_rows {
        if !dot(&cone.rows[i], &y).is_positive() {
            return None;
        }
    }
    Some(y)
}
