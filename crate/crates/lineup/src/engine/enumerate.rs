//! Enumeration of fundamental lineups together with their fundamental cones.
//!
//! A lineup of length r is grown from one of length r-1 by appending a
//! runner-up S and intersecting the parent cone with the halfspaces
//! `<y, chi(S) - chi(T)> >= 0` over the other runner-ups T; the child is a
//! lineup exactly when the resulting cone is full-dimensional, decided by
//! the strict interior point construction. Branches are independent, so
//! levels extend in parallel and merge deterministically.

use rayon::prelude::*;

use crate::combinatorics::{runner_ups, Configuration, GaleIdeal, Params};
use crate::error::{Error, Result};
use crate::geom::dd::DdState;
use crate::geom::dot;
use crate::Int;
use num_traits::Signed;

/// An ordered sequence of configurations carrying the H-representation of
/// its fundamental cone (chamber rows first, then one block per step).
#[derive(Clone, Debug)]
pub struct Lineup {
    params: Params,
    ideal: GaleIdeal,
    rows: Vec<Vec<Int>>,
    dd: DdState,
}

pub(crate) fn chi(cfg: &Configuration) -> Vec<Int> {
    cfg.multiplicities()
        .iter()
        .map(|&m| Int::from(m as i64))
        .collect()
}

impl Lineup {
    fn root(params: Params) -> Self {
        let d = params.d as usize;
        let mut dd = DdState::full_space(d);
        let mut rows = Vec::new();
        for i in 0..d.saturating_sub(1) {
            let mut row = vec![Int::from(0); d];
            row[i] = Int::from(1);
            row[i + 1] = Int::from(-1);
            dd.push_row(row.clone());
            rows.push(row);
        }
        let mut ideal = GaleIdeal::empty(params);
        ideal.insert_unchecked(params.minimum());
        Lineup {
            params,
            ideal,
            rows,
            dd,
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn seq(&self) -> &[Configuration] {
        self.ideal.insertion_order()
    }

    pub fn len(&self) -> usize {
        self.seq().len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq().is_empty()
    }

    pub fn ideal(&self) -> &GaleIdeal {
        &self.ideal
    }

    /// H-representation rows of the closed fundamental cone.
    pub fn cone_rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// Closed-cone membership: every row non-negative at y.
    pub fn cone_contains(&self, y: &[Int]) -> bool {
        self.rows.iter().all(|row| !dot(row, y).is_negative())
    }

    /// Extreme rays of the fundamental cone, in last-coordinate-zero
    /// essential form.
    pub fn essential_rays(&self) -> Vec<Vec<Int>> {
        let v = self.dd.cone_v();
        let mut out: Vec<Vec<Int>> = v
            .rays
            .iter()
            .filter_map(|ray| {
                let e = essential_form(ray);
                if e.iter().all(|x| x == &Int::from(0)) {
                    None
                } else {
                    Some(e)
                }
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn try_extend(&self, s: &Configuration, runner: &[Configuration]) -> Option<Lineup> {
        let mut child = self.clone();
        let chi_s = chi(s);
        for t in runner {
            if t == s {
                continue;
            }
            let chi_t = chi(t);
            let row: Vec<Int> = chi_s.iter().zip(chi_t.iter()).map(|(a, b)| a - b).collect();
            child.dd.push_row(row.clone());
            child.rows.push(row);
        }
        if !child.dd.has_strict_point() {
            return None;
        }
        child.ideal.insert_unchecked(s.clone());
        Some(child)
    }

    /// All coherent one-step extensions, in Gale-sorted runner-up order.
    pub fn extend_all(&self) -> Vec<Lineup> {
        let runner = runner_ups(&self.ideal);
        runner
            .iter()
            .filter_map(|s| self.try_extend(s, &runner))
            .collect()
    }
}

/// Subtract the last coordinate from every entry (the lineality direction
/// (1,...,1) is free in every fundamental cone) and reduce.
pub fn essential_form(ray: &[Int]) -> Vec<Int> {
    let last = ray.last().cloned().unwrap_or_else(|| Int::from(0));
    let mut v: Vec<Int> = ray.iter().map(|x| x - &last).collect();
    crate::geom::linalg::reduce_gcd(&mut v);
    v
}

/// All fundamental lineups of every length 1..=params.r, level by level.
pub fn enumerate_levels(params: &Params) -> Result<Vec<Vec<Lineup>>> {
    if (params.r as u128) > params.ambient_count() {
        return Err(Error::LineupTooLong {
            r: params.r,
            d_total: params.ambient_count(),
        });
    }
    let mut levels: Vec<Vec<Lineup>> = vec![vec![Lineup::root(*params)]];
    for _ in 1..params.r {
        let prev = levels.last().unwrap();
        let next: Vec<Lineup> = prev
            .par_iter()
            .map(|parent| parent.extend_all())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        levels.push(next);
    }
    Ok(levels)
}

/// All fundamental lineups of length exactly params.r, in depth-first order
/// by Gale-sorted runner-ups.
pub fn enumerate_lineups(params: &Params) -> Result<Vec<Lineup>> {
    Ok(enumerate_levels(params)?.pop().unwrap())
}

/// Replay an explicit configuration sequence through the same incremental
/// cone construction; true iff every step keeps the cone full-dimensional
/// (i.e. the sequence is a coherent lineup).
pub fn is_coherent_sequence(params: &Params, seq: &[Configuration]) -> bool {
    if seq.is_empty() || seq[0] != params.minimum() {
        return false;
    }
    let mut node = Lineup::root(*params);
    for s in &seq[1..] {
        let runner = runner_ups(&node.ideal);
        if !runner.contains(s) {
            return false;
        }
        match node.try_extend(s, &runner) {
            Some(next) => node = next,
            None => return false,
        }
    }
    true
}
