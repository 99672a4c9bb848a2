//! Threshold certification of Gale ideals by exact strict separation.
//!
//! An ideal is threshold when some functional y values every member strictly
//! above every non-member. The closed cone of such functionals is converted
//! to rays; the sum of the rays is strictly feasible iff anything is. On
//! failure a common point of the two convex hulls is produced from the tight
//! difference vectors (a certificate in the sense of Gordan's alternative).

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::simplex::nonneg_solution;
use crate::combinatorics::{Configuration, GaleIdeal};
use crate::error::{Error, Result};
use crate::geom::dd::{dd_h_to_v, ConeH};
use crate::geom::linalg::{dot, reduce_gcd};
use crate::{Int, Rat};

#[derive(Clone, Debug)]
pub enum ThresholdVerdict {
    /// A witness y with <y, chi(S)> > <y, chi(T)> for all S in the ideal and
    /// T outside it.
    Threshold { witness: Vec<Int> },
    /// A point lying in the convex hull of the member images and in the
    /// convex hull of the non-member images.
    NotThreshold { common_point: Vec<Rat> },
}

impl ThresholdVerdict {
    pub fn is_threshold(&self) -> bool {
        matches!(self, ThresholdVerdict::Threshold { .. })
    }
}

fn chi_int(cfg: &Configuration) -> Vec<Int> {
    cfg.multiplicities()
        .iter()
        .map(|&m| Int::from(m as i64))
        .collect()
}

pub fn is_threshold(ideal: &GaleIdeal) -> Result<ThresholdVerdict> {
    let params = ideal.params();
    if ideal.is_empty() {
        return Err(Error::InvalidParams("the ideal must be nonempty".into()));
    }
    let complement: Vec<Configuration> = params
        .all_configurations()
        .into_iter()
        .filter(|c| !ideal.contains(c))
        .collect();
    if complement.is_empty() {
        return Err(Error::InvalidParams("the ideal must be proper".into()));
    }

    // Difference vectors chi(S) - chi(T); deduplicate but remember one
    // originating pair per vector for the certificate.
    let mut pair_of: HashMap<Vec<Int>, (Vec<Int>, Vec<Int>)> = HashMap::new();
    for s in ideal.members() {
        let chi_s = chi_int(s);
        for t in &complement {
            let chi_t = chi_int(t);
            let delta: Vec<Int> = chi_s.iter().zip(chi_t.iter()).map(|(a, b)| a - b).collect();
            pair_of
                .entry(delta)
                .or_insert_with(|| (chi_s.clone(), chi_t.clone()));
        }
    }
    let mut deltas: Vec<Vec<Int>> = pair_of.keys().cloned().collect();
    deltas.sort();

    let cone = ConeH::new(params.d as usize, deltas.clone());
    let v = dd_h_to_v(&cone);
    let mut witness = vec![Int::zero(); params.d as usize];
    for ray in &v.rays {
        for (a, b) in witness.iter_mut().zip(ray.iter()) {
            *a += b;
        }
    }
    reduce_gcd(&mut witness);

    if deltas
        .iter()
        .all(|delta| dot(delta, &witness).is_positive())
    {
        return Ok(ThresholdVerdict::Threshold { witness });
    }

    // No strict separator exists; by Gordan's alternative the tight
    // differences admit a non-negative vanishing combination, which pairs up
    // to a common point of the two hulls.
    let tight: Vec<&Vec<Int>> = deltas
        .iter()
        .filter(|delta| dot(delta, &witness).is_zero())
        .collect();
    let d = params.d as usize;
    let mut rows: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            tight
                .iter()
                .map(|delta| Rat::from(delta[i].clone()))
                .collect()
        })
        .collect();
    rows.push(vec![Rat::one(); tight.len()]);
    let mut target = vec![Rat::zero(); d];
    target.push(Rat::one());
    let lambda = nonneg_solution(&rows, &target)
        .expect("a vanishing combination exists whenever strict separation fails");

    let mut common_point = vec![Rat::zero(); d];
    for (coef, delta) in lambda.iter().zip(tight.iter()) {
        if coef.is_zero() {
            continue;
        }
        let (chi_s, _) = &pair_of[*delta];
        for (acc, x) in common_point.iter_mut().zip(chi_s.iter()) {
            *acc += coef * Rat::from(x.clone());
        }
    }
    Ok(ThresholdVerdict::NotThreshold { common_point })
}

/// Membership of a rational point in the convex hull of the chi-images of a
/// configuration list (used by tests to validate certificates).
pub fn in_configuration_hull(point: &[Rat], configs: &[Configuration]) -> bool {
    if configs.is_empty() {
        return false;
    }
    let d = point.len();
    let mut rows: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            configs
                .iter()
                .map(|c| Rat::from(Int::from(c.multiplicities()[i] as i64)))
                .collect()
        })
        .collect();
    rows.push(vec![Rat::one(); configs.len()]);
    let mut target = point.to_vec();
    target.push(Rat::one());
    nonneg_solution(&rows, &target).is_some()
}
