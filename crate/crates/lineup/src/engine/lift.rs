//! Stability lifts: transport a generated system between parameter pairs
//! inside the stable range by duplicating the leading coefficient (fermions)
//! or padding zeros (bosons); right-hand sides shift uniformly by the
//! leading coefficient times the change in particle number.

use super::generate::{ExclusionInequality, GeneratedSystem, RhsAffine};
use super::symbolic::OccupationMatrix;
use crate::combinatorics::{Params, Statistics};
use crate::error::{Error, Result};

fn in_range(statistics: Statistics, r: u32, n: u32, d: u32) -> bool {
    match statistics {
        Statistics::Fermion => n + 1 >= r && d + 1 >= n + r,
        Statistics::Boson => n + 1 >= r && d >= r,
    }
}

fn is_first_basis(lhs: &[i64]) -> bool {
    lhs.first() == Some(&1) && lhs[1..].iter().all(|&x| x == 0)
}

fn is_last_but_one_basis(lhs: &[i64]) -> bool {
    let d = lhs.len();
    lhs[..d - 1].iter().all(|&x| x == 1) && lhs[d - 1] == 0
}

fn lift_lhs(
    lhs: &[i64],
    statistics: Statistics,
    r: u32,
    n0: u32,
    d0: u32,
    n: u32,
    d: u32,
) -> Result<Vec<i64>> {
    let (r, n0, d0, n, d) = (r as usize, n0 as usize, d0 as usize, n as usize, d as usize);
    match statistics {
        Statistics::Fermion => {
            // The source ray is constant y1 on the first n0-r+2 coordinates,
            // carries a window of 2r-4 free coordinates, and is zero on the
            // last d0-n0-r+2; re-window to the target parameters.
            let head = n0 + 2 - r;
            let y1 = lhs[0];
            if lhs[..head].iter().any(|&x| x != y1) || lhs[n0 + r - 1..].iter().any(|&x| x != 0) {
                return Err(Error::LiftOutOfRange(format!(
                    "{lhs:?} is not in the image of the stability map for (r={r}, N={n0}, d={d0})"
                )));
            }
            let window = &lhs[head - 1..n0 + r - 1];
            let mut out = vec![y1; n + 2 - r];
            out.extend_from_slice(&window[1..window.len() - 1]);
            out.resize(d, 0);
            debug_assert_eq!(out.len(), d);
            Ok(out)
        }
        Statistics::Boson => {
            if lhs[r - 1..].iter().any(|&x| x != 0) {
                return Err(Error::LiftOutOfRange(format!(
                    "{lhs:?} is not supported on the first {} coordinates",
                    r - 1
                )));
            }
            let mut out = lhs[..r - 1].to_vec();
            out.resize(d, 0);
            Ok(out)
        }
    }
}

fn lift_vertex(
    m: &OccupationMatrix,
    statistics: Statistics,
    n0: u32,
    d0: u32,
    n: u32,
    d: u32,
) -> OccupationMatrix {
    let r = m.lineup_length();
    let extra = (n - n0) as usize;
    let mut matrix: Vec<Vec<i64>> = Vec::with_capacity(d as usize);
    match statistics {
        Statistics::Fermion => {
            // Every configuration of a source lineup lives inside the window
            // [1, n0+r-1]; rows beyond it are zero and get re-padded to the
            // target dimension after the leading ones are inserted.
            let window = (n0 + r as u32 - 1).min(d0) as usize;
            debug_assert!(m.matrix[window..]
                .iter()
                .all(|row| row.iter().all(|&x| x == 0)));
            for _ in 0..extra {
                matrix.push(vec![1; r]);
            }
            matrix.extend(m.matrix[..window].iter().cloned());
            while matrix.len() < d as usize {
                matrix.push(vec![0; r]);
            }
        }
        Statistics::Boson => {
            // Source configurations only use orbitals 1..=r.
            let window = (r as u32).min(d0) as usize;
            debug_assert!(m.matrix[window..]
                .iter()
                .all(|row| row.iter().all(|&x| x == 0)));
            matrix.extend(m.matrix[..window].iter().cloned());
            matrix[0].iter_mut().for_each(|x| *x += extra as i64);
            while matrix.len() < d as usize {
                matrix.push(vec![0; r]);
            }
        }
    }
    debug_assert_eq!(matrix.len(), d as usize);
    OccupationMatrix { matrix }
}

/// Lift a generated system to target parameters (N, d) inside the stable
/// range of its lineup length.
pub fn stability_lift(base: &GeneratedSystem, n: u32, d: u32) -> Result<GeneratedSystem> {
    let statistics = base.params.statistics;
    let r = base.params.r;
    let (n0, d0) = (base.params.n, base.params.d);
    if !in_range(statistics, r, n0, d0) {
        return Err(Error::LiftOutOfRange(format!(
            "source parameters (N={n0}, d={d0}) are outside the stable range of r={r}"
        )));
    }
    if !in_range(statistics, r, n, d) {
        return Err(Error::LiftOutOfRange(format!(
            "target parameters (N={n}, d={d}) are outside the stable range of r={r}"
        )));
    }
    if n < n0 || d < d0 {
        return Err(Error::LiftOutOfRange(
            "lift targets must not shrink the parameters".into(),
        ));
    }
    let params = Params::new(statistics, n, d, r)?;

    let mut inequalities = Vec::with_capacity(base.inequalities.len());
    for ineq in &base.inequalities {
        let lifted = lift_one(ineq, statistics, r, n0, d0, n, d)?;
        inequalities.push(lifted);
    }
    inequalities.sort_by(|a, b| (a.first_r, &a.lhs).cmp(&(b.first_r, &b.lhs)));

    let occupation_vectors = base
        .occupation_vectors
        .iter()
        .map(|m| lift_vertex(m, statistics, n0, d0, n, d))
        .collect();

    Ok(GeneratedSystem {
        params,
        occupation_vectors,
        inequalities,
    })
}

fn lift_one(
    ineq: &ExclusionInequality,
    statistics: Statistics,
    r: u32,
    n0: u32,
    d0: u32,
    n: u32,
    d: u32,
) -> Result<ExclusionInequality> {
    let d_us = d as usize;
    // Trivial facets are transported by name, not by the window map.
    if statistics == Statistics::Fermion && is_first_basis(&ineq.lhs) {
        let mut lhs = vec![0i64; d_us];
        lhs[0] = 1;
        return Ok(ExclusionInequality {
            lhs,
            rhs_w: vec![1; r as usize],
            rhs_affine: RhsAffine {
                a: 0,
                b: 1,
                c: vec![0; r as usize],
            },
            first_r: ineq.first_r,
        });
    }
    if is_last_but_one_basis(&ineq.lhs) {
        let mut lhs = vec![1i64; d_us];
        lhs[d_us - 1] = 0;
        return Ok(ExclusionInequality {
            lhs,
            rhs_w: vec![n as i64; r as usize],
            rhs_affine: RhsAffine {
                a: 1,
                b: 0,
                c: vec![0; r as usize],
            },
            first_r: ineq.first_r,
        });
    }
    if r == 1 {
        return Err(Error::LiftOutOfRange(
            "r = 1 systems consist of trivial facets only".into(),
        ));
    }
    let lhs = lift_lhs(&ineq.lhs, statistics, r, n0, d0, n, d)?;
    let shift = ineq.lhs[0] * (n as i64 - n0 as i64);
    let rhs_w: Vec<i64> = ineq.rhs_w.iter().map(|s| s + shift).collect();
    Ok(ExclusionInequality {
        lhs,
        rhs_w,
        rhs_affine: ineq.rhs_affine.clone(),
        first_r: ineq.first_r,
    })
}
