//! The symmetric face-dimension criterion: given a fundamental functional y,
//! the dimension of the face it maximizes equals the affine rank of the
//! block-sum projections of the maximizing occupation vectors, plus c_j - 1
//! for every composition block not pointwise fixed on the face.

use super::enumerate::Lineup;
use super::symbolic::{default_weight, occupation_vector};
use crate::combinatorics::Params;
use crate::error::{Error, Result};
use crate::geom::linalg::affine_rank;
use crate::{Int, Rat};
use num_traits::Zero;

/// Run-lengths of equal consecutive entries of a non-increasing vector.
pub fn composition_of(y: &[Int]) -> Result<Vec<usize>> {
    for w in y.windows(2) {
        if w[0] < w[1] {
            return Err(Error::InvalidParams(format!(
                "vector is not non-increasing: {:?}",
                y
            )));
        }
    }
    let mut parts = Vec::new();
    let mut run = 0usize;
    for i in 0..y.len() {
        run += 1;
        if i + 1 == y.len() || y[i + 1] != y[i] {
            parts.push(run);
            run = 0;
        }
    }
    Ok(parts)
}

/// The lineups whose closed fundamental cone contains y; combinatorial, no
/// concrete weight involved.
pub fn maximizers<'a>(y: &[Int], lineups: &'a [Lineup]) -> Vec<&'a Lineup> {
    lineups.iter().filter(|l| l.cone_contains(y)).collect()
}

fn block_ranges(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(parts.len());
    let mut start = 0;
    for &c in parts {
        out.push((start, start + c));
        start += c;
    }
    out
}

/// Dimension of the face of the spectral polytope maximized by the
/// fundamental vector y (y must not be a multiple of (1,...,1)).
pub fn face_dimension(y: &[Int], params: &Params, lineups: &[Lineup]) -> Result<usize> {
    let parts = composition_of(y)?;
    if parts.len() <= 1 {
        return Err(Error::InvalidParams(
            "face dimension is undefined for constant functionals".into(),
        ));
    }
    let maxed = maximizers(y, lineups);
    debug_assert!(
        !maxed.is_empty(),
        "every fundamental vector lies in some closed cone"
    );
    let ranges = block_ranges(&parts);

    // A block is pointwise fixed exactly when every maximizing occupation
    // matrix has identical rows across it; by fundamentality this matches
    // coordinate equality of the vertices at any strictly decreasing weight.
    let matrices: Vec<_> = maxed.iter().map(|l| occupation_vector(l)).collect();
    let mut unfixed_sum = 0usize;
    for &(lo, hi) in &ranges {
        let fixed = matrices
            .iter()
            .all(|m| (lo + 1..hi).all(|i| m.row(i) == m.row(lo)));
        if !fixed {
            unfixed_sum += hi - lo - 1;
        }
    }

    // Lineup length of the level under inspection (not necessarily params.r:
    // the sweep calls this at every intermediate length).
    let level_len = lineups
        .first()
        .map(|l| l.len())
        .unwrap_or(params.r as usize);
    let w = default_weight(level_len);
    let points: Vec<Vec<Rat>> = matrices
        .iter()
        .map(|m| {
            let o = m.evaluate(&w);
            ranges
                .iter()
                .map(|&(lo, hi)| {
                    let mut acc = Rat::zero();
                    for x in &o[lo..hi] {
                        acc += x;
                    }
                    acc
                })
                .collect()
        })
        .collect();

    Ok(affine_rank(&points) + unfixed_sum)
}

/// Facet test: the face has dimension d-2 (the polytope itself lives in the
/// hyperplane sum x = N, so facets have dimension d-2).
pub fn is_facet_normal(y: &[Int], params: &Params, lineups: &[Lineup]) -> Result<bool> {
    Ok(face_dimension(y, params, lineups)? == params.d as usize - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Statistics;
    use crate::engine::enumerate::enumerate_lineups;
    use crate::int;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            composition_of(&iv(&[3, 2, 2, 2, 1, 1, 0, 0])).unwrap(),
            vec![1, 3, 2, 2]
        );
        assert_eq!(composition_of(&iv(&[5, 5, 5])).unwrap(), vec![3]);
        assert_eq!(
            composition_of(&iv(&[4, 3, 2, 1])).unwrap(),
            vec![1, 1, 1, 1]
        );
        assert!(composition_of(&iv(&[1, 2])).is_err());
    }

    #[test]
    fn maximizers_on_the_fermion_r4_system() {
        let params = Params::new(Statistics::Fermion, 3, 6, 4).unwrap();
        let lineups = enumerate_lineups(&params).unwrap();
        // f1 fails the last cone's constraint y4~ >= y1~ + y2~.
        let f1 = iv(&[1, 0, 0, 0, 0, 0]);
        let v: Vec<usize> = maximizers(&f1, &lineups)
            .iter()
            .map(|l| lineups.iter().position(|m| std::ptr::eq(*l, m)).unwrap())
            .collect();
        assert_eq!(v, vec![0, 1, 2]);
        // f3 zeroes every cone-defining difference, so all four cones contain it.
        let f3 = iv(&[1, 1, 1, 0, 0, 0]);
        assert_eq!(maximizers(&f3, &lineups).len(), 4);
        // A strictly interior point of the first cone sees only that cone.
        let interior = iv(&[20, 12, 6, 3, 1, 0]);
        assert_eq!(maximizers(&interior, &lineups).len(), 1);
    }

    #[test]
    fn face_dimensions_of_the_fermion_r4_system() {
        let params = Params::new(Statistics::Fermion, 3, 6, 4).unwrap();
        let lineups = enumerate_lineups(&params).unwrap();
        // f1 is a facet (dimension d-2 = 4); f2 and f4 are not.
        assert_eq!(
            face_dimension(&iv(&[1, 0, 0, 0, 0, 0]), &params, &lineups).unwrap(),
            4
        );
        assert!(face_dimension(&iv(&[1, 1, 0, 0, 0, 0]), &params, &lineups).unwrap() < 4);
        assert!(face_dimension(&iv(&[1, 1, 1, 1, 0, 0]), &params, &lineups).unwrap() < 4);
        for ray in [
            iv(&[1, 1, 1, 0, 0, 0]),
            iv(&[1, 1, 1, 1, 1, 0]),
            iv(&[2, 2, 1, 1, 0, 0]),
            iv(&[2, 1, 1, 1, 0, 0]),
            iv(&[2, 2, 1, 1, 1, 0]),
        ] {
            assert!(is_facet_normal(&ray, &params, &lineups).unwrap());
        }
    }

    #[test]
    fn middle_grassmannian_rays_cut_smaller_spectral_polytopes() {
        // For f_i with 1 < i < N the face is a copy of the (N-i, d-i)
        // polytope, of dimension d-i-1.
        let params = Params::new(Statistics::Fermion, 3, 8, 3).unwrap();
        let lineups = enumerate_lineups(&params).unwrap();
        let f2 = iv(&[1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(face_dimension(&f2, &params, &lineups).unwrap(), 8 - 2 - 1);
    }
}
