//! The full generator: enumerate fundamental lineups level by level, collect
//! candidate rays from the fundamental cones, certify facets through the
//! face-dimension criterion, and attach right-hand sides.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::enumerate::enumerate_levels;
use super::facecheck::is_facet_normal;
use super::rhs::rhs_of;
use super::symbolic::{occupation_vector, OccupationMatrix};
use crate::combinatorics::Params;
use crate::error::Result;
use crate::geom::dot_rat;
use crate::{Int, Rat};

/// Right-hand side in the parameter-family form `a*N + b + sum_j c_j w_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsAffine {
    pub a: i64,
    pub b: i64,
    pub c: Vec<i64>,
}

/// One generalized exclusion inequality `<lhs, x_dec> <= <rhs_w, w>`, with
/// `x_dec` the decreasingly sorted spectrum. `lhs` is canonical: integer,
/// gcd one, non-increasing, last coordinate zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionInequality {
    pub lhs: Vec<i64>,
    pub rhs_w: Vec<i64>,
    pub rhs_affine: RhsAffine,
    pub first_r: u32,
}

impl ExclusionInequality {
    pub fn lhs_int(&self) -> Vec<Int> {
        self.lhs.iter().map(|&x| Int::from(x)).collect()
    }

    pub fn rhs_w_int(&self) -> Vec<Int> {
        self.rhs_w.iter().map(|&x| Int::from(x)).collect()
    }

    /// Exact numeric right-hand side at a concrete weight vector.
    pub fn rhs_value(&self, w: &[Rat]) -> Rat {
        dot_rat(&self.rhs_w_int(), w)
    }

    /// `a*N + b + <c, w>` evaluated at given particle count and weights.
    pub fn rhs_affine_value(&self, n: u32, w: &[Rat]) -> Rat {
        let mut acc = Rat::from(Int::from(self.rhs_affine.a * n as i64 + self.rhs_affine.b));
        for (cj, wj) in self.rhs_affine.c.iter().zip(w.iter()) {
            if *cj != 0 {
                acc += Rat::from(Int::from(*cj)) * wj;
            }
        }
        acc
    }
}

/// The output of the generator: symbolic vertices, a non-redundant
/// inequality system, and the trace equation `sum x = N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedSystem {
    pub params: Params,
    pub occupation_vectors: Vec<OccupationMatrix>,
    pub inequalities: Vec<ExclusionInequality>,
}

impl GeneratedSystem {
    /// The affine-hull equation (coefficients, value).
    pub fn equation(&self) -> (Vec<i64>, i64) {
        (vec![1; self.params.d as usize], self.params.n as i64)
    }
}

fn to_i64(x: &Int) -> i64 {
    x.to_i64().expect("coefficient fits in 64 bits")
}

fn is_first_basis(lhs: &[Int]) -> bool {
    lhs.first().map(|x| *x == Int::from(1)).unwrap_or(false)
        && lhs[1..].iter().all(|x| *x == Int::from(0))
}

fn is_last_but_one_basis(lhs: &[Int]) -> bool {
    let d = lhs.len();
    lhs[..d - 1].iter().all(|x| *x == Int::from(1)) && lhs[d - 1] == Int::from(0)
}

/// Build the affine right-hand side record from a canonical lhs and its
/// top-r sums. The two trivial facets keep their constant families (1 and N
/// respectively); every other ray carries the first-coefficient shift of the
/// stability maps.
fn affine_of(lhs: &[Int], rhs_w: &[Int], params: &Params) -> RhsAffine {
    let r = rhs_w.len();
    let all_equal = rhs_w.iter().all(|x| x == &rhs_w[0]);
    if all_equal && is_first_basis(lhs) && rhs_w[0] == Int::from(1) {
        return RhsAffine {
            a: 0,
            b: 1,
            c: vec![0; r],
        };
    }
    if all_equal && is_last_but_one_basis(lhs) && rhs_w[0] == Int::from(params.n as i64) {
        return RhsAffine {
            a: 1,
            b: 0,
            c: vec![0; r],
        };
    }
    let a = to_i64(&lhs[0]);
    let s_r = rhs_w.last().expect("r >= 1");
    let b = to_i64(s_r) - a * params.n as i64;
    let c = rhs_w.iter().map(|s| to_i64(&(s - s_r))).collect();
    RhsAffine { a, b, c }
}

/// Generate a non-redundant H-representation of the spectral polytope:
/// run the lineup sweep from length 1 to params.r, stamp each candidate ray
/// with the first length at which it passes the facet test, and attach the
/// top-r sums as right-hand sides.
pub fn generate_h_representation(params: &Params) -> Result<GeneratedSystem> {
    if params.ambient_count() == 1 {
        // The polytope degenerates to a single point: only the equation holds.
        let levels = enumerate_levels(params)?;
        let occupation_vectors = levels
            .last()
            .unwrap()
            .iter()
            .map(occupation_vector)
            .collect();
        return Ok(GeneratedSystem {
            params: *params,
            occupation_vectors,
            inequalities: Vec::new(),
        });
    }

    let levels = enumerate_levels(params)?;
    let mut stamped: BTreeMap<Vec<Int>, u32> = BTreeMap::new();
    for (idx, level) in levels.iter().enumerate() {
        let r_here = idx as u32 + 1;
        let mut candidates: BTreeSet<Vec<Int>> = BTreeSet::new();
        for lineup in level {
            for ray in lineup.essential_rays() {
                candidates.insert(ray);
            }
        }
        for y in candidates {
            if stamped.contains_key(&y) {
                continue;
            }
            if is_facet_normal(&y, params, level)? {
                stamped.insert(y, r_here);
            }
        }
    }

    let mut inequalities = Vec::with_capacity(stamped.len());
    for (lhs, first_r) in &stamped {
        let rhs_w = rhs_of(lhs, params)?;
        let rhs_affine = affine_of(lhs, &rhs_w, params);
        inequalities.push(ExclusionInequality {
            lhs: lhs.iter().map(to_i64).collect(),
            rhs_w: rhs_w.iter().map(to_i64).collect(),
            rhs_affine,
            first_r: *first_r,
        });
    }
    inequalities.sort_by(|a, b| (a.first_r, &a.lhs).cmp(&(b.first_r, &b.lhs)));

    let occupation_vectors = levels
        .last()
        .unwrap()
        .iter()
        .map(occupation_vector)
        .collect();
    Ok(GeneratedSystem {
        params: *params,
        occupation_vectors,
        inequalities,
    })
}

/// Per-level facet counts: how many inequalities first appear at each length
/// 1..=r (the hierarchy labels of the appendix tables).
pub fn new_facet_counts(system: &GeneratedSystem) -> Vec<usize> {
    let mut counts = vec![0usize; system.params.r as usize];
    for ineq in &system.inequalities {
        counts[ineq.first_r as usize - 1] += 1;
    }
    counts
}

/// Lineup (fundamental occupation vector) counts per level 1..=r.
pub fn lineup_counts(params: &Params) -> Result<Vec<usize>> {
    Ok(enumerate_levels(params)?.iter().map(|l| l.len()).collect())
}
