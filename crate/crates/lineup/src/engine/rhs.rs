//! Right-hand sides: the r largest N-sums of entries of a fundamental
//! functional, found by walking the Gale poset best-first from its minimum
//! (never by full enumeration of the configuration set).

use std::collections::{BinaryHeap, HashSet};

use crate::combinatorics::{upper_covers, Configuration, Params};
use crate::error::{Error, Result};
use crate::geom::dot;
use crate::Int;

fn value(y: &[Int], cfg: &Configuration) -> Int {
    let chi: Vec<Int> = cfg
        .multiplicities()
        .iter()
        .map(|&m| Int::from(m as i64))
        .collect();
    dot(y, &chi)
}

/// The r largest values of `<y, chi(S)>` over all configurations S, sorted
/// non-increasingly (as a multiset). Requires y non-increasing: the value map
/// is then order-reversing on the Gale poset, so the top values sit on an
/// order ideal reachable from the minimum through upper covers.
pub fn rhs_of(y: &[Int], params: &Params) -> Result<Vec<Int>> {
    for w in y.windows(2) {
        if w[0] < w[1] {
            return Err(Error::InvalidParams(
                "functional must be non-increasing".into(),
            ));
        }
    }
    if (params.r as u128) > params.ambient_count() {
        return Err(Error::LineupTooLong {
            r: params.r,
            d_total: params.ambient_count(),
        });
    }
    let mut heap: BinaryHeap<(Int, Configuration)> = BinaryHeap::new();
    let mut seen: HashSet<Configuration> = HashSet::new();
    let min = params.minimum();
    heap.push((value(y, &min), min.clone()));
    seen.insert(min);
    let mut top = Vec::with_capacity(params.r as usize);
    while top.len() < params.r as usize {
        let (val, cfg) = heap.pop().expect("poset has at least r elements");
        top.push(val);
        for up in upper_covers(&cfg, params.statistics) {
            if seen.insert(up.clone()) {
                heap.push((value(y, &up), up));
            }
        }
    }
    Ok(top)
}
