//! Independent brute-force verification: symmetrize the occupation vectors
//! at a concrete weight, enumerate facets of the convex hull from scratch,
//! and compare against the symbolic engine output expanded over the
//! symmetric group.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::combinatorics::Params;
use crate::engine::{check_weights, GeneratedSystem};
use crate::engine::{enumerate_lineups, occupation_vector};
use crate::error::{Error, Result};
use crate::geom::facets::{facets_from_vertices, FacetList};
use crate::geom::linalg::canonicalize;
use crate::{Int, Rat};

/// All permutations of 0..n (lexicographic order).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        out.push(idx.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| idx[i] < idx[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| idx[j] > idx[i]).unwrap();
        idx.swap(i, j);
        idx[i + 1..].reverse();
    }
    out
}

/// All symmetric-group images of all fundamental occupation vectors
/// evaluated at w, deduplicated.
pub fn symmetrized_vertices(params: &Params, w: &[Rat]) -> Result<Vec<Vec<Rat>>> {
    check_weights(w, params.r as usize)?;
    let lineups = enumerate_lineups(params)?;
    let d = params.d as usize;
    let perms = permutations(d);
    let mut set: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for lineup in &lineups {
        let o = occupation_vector(lineup).evaluate(w);
        for perm in &perms {
            let img: Vec<Rat> = perm.iter().map(|&i| o[i].clone()).collect();
            set.insert(img);
        }
    }
    Ok(set.into_iter().collect())
}

/// Complete irredundant facet list of the convex hull of the symmetrized
/// vertex set, guarded to desk scale.
pub fn brute_force_h_rep(params: &Params, w: &[Rat]) -> Result<FacetList> {
    if params.d > 7 {
        return Err(Error::SizeGuard(format!(
            "d={} exceeds the guard d <= 7",
            params.d
        )));
    }
    let points = symmetrized_vertices(params, w)?;
    if points.len() > 20_000 {
        return Err(Error::SizeGuard(format!(
            "{} symmetrized vertices exceed the guard of 20000",
            points.len()
        )));
    }
    Ok(facets_from_vertices(&points))
}

/// Canonical form of `<n, x> <= b` modulo the trace hyperplane sum(x) = N:
/// translate the normal to last coordinate zero and scale positively to
/// gcd one.
fn canonical_facet(normal: &[Int], offset: &Int, n_particles: i64) -> (Vec<Int>, Int) {
    let d = normal.len();
    let last = normal[d - 1].clone();
    let mut v: Vec<Int> = normal.iter().map(|x| x - &last).collect();
    let mut b = offset - &last * Int::from(n_particles);
    let mut joint = v.clone();
    joint.push(b.clone());
    let mut g = Int::zero();
    for x in &joint {
        g = num_integer::Integer::gcd(&g, x);
    }
    if !g.is_zero() && g != Int::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
        b = &b / &g;
    }
    (v, b)
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub equal: bool,
    pub equations_match: bool,
    pub engine_count: usize,
    pub oracle_count: usize,
    pub missing_in_oracle: Vec<String>,
    pub missing_in_engine: Vec<String>,
}

impl ComparisonReport {
    pub fn summary(&self) -> String {
        if self.equal {
            format!("agreement: {} facets, equations match", self.oracle_count)
        } else {
            format!(
                "disagreement: engine expands to {} facets, oracle found {}; {} engine-only, {} oracle-only, equations {}",
                self.engine_count,
                self.oracle_count,
                self.missing_in_oracle.len(),
                self.missing_in_engine.len(),
                if self.equations_match { "match" } else { "differ" }
            )
        }
    }
}

/// Evaluate the engine's symbolic inequalities at w, expand over the
/// symmetric group, canonicalize both sides, and compare as sets.
pub fn compare_h_reps(
    system: &GeneratedSystem,
    oracle: &FacetList,
    w: &[Rat],
) -> Result<ComparisonReport> {
    let params = &system.params;
    check_weights(w, params.r as usize)?;
    let d = params.d as usize;
    let n_particles = params.n as i64;
    let perms = permutations(d);

    let mut engine: BTreeSet<(Vec<Int>, Int)> = BTreeSet::new();
    for ineq in &system.inequalities {
        let q = ineq.rhs_value(w);
        let lhs = ineq.lhs_int();
        let scaled: Vec<Int> = lhs.iter().map(|x| x * q.denom()).collect();
        let offset = q.numer().clone();
        for perm in &perms {
            let img: Vec<Int> = perm.iter().map(|&i| scaled[i].clone()).collect();
            engine.insert(canonical_facet(&img, &offset, n_particles));
        }
    }

    let mut oracle_set: BTreeSet<(Vec<Int>, Int)> = BTreeSet::new();
    for (normal, offset) in &oracle.facets {
        oracle_set.insert(canonical_facet(normal, offset, n_particles));
    }

    let missing_in_oracle: Vec<String> = engine
        .difference(&oracle_set)
        .map(|(v, b)| format!("{v:?} <= {b}"))
        .collect();
    let missing_in_engine: Vec<String> = oracle_set
        .difference(&engine)
        .map(|(v, b)| format!("{v:?} <= {b}"))
        .collect();

    // The affine hull must be exactly the trace hyperplane.
    let mut expected_eq = vec![Int::from(1); d];
    expected_eq.push(Int::from(n_particles));
    let expected_eq = canonicalize(&expected_eq);
    let equations_match = oracle.equations.len() == 1 && {
        let (coeffs, value) = &oracle.equations[0];
        let mut joint = coeffs.clone();
        joint.push(value.clone());
        canonicalize(&joint) == expected_eq
    };

    let equal = missing_in_engine.is_empty() && missing_in_oracle.is_empty() && equations_match;
    Ok(ComparisonReport {
        equal,
        equations_match,
        engine_count: engine.len(),
        oracle_count: oracle_set.len(),
        missing_in_oracle,
        missing_in_engine,
    })
}
