//! Facet enumeration of a polytope from a (possibly redundant) point list,
//! by homogenizing to rays and running double description on the dual side.
//!
//! For points p the dual cone `{(a, b) : <a, p> + b >= 0 for all p}` has one
//! H-row per point; its extreme rays are the facets of conv(points) written
//! as `<a, x> + b >= 0`, and its lineality basis gives the affine-hull
//! equations.

use num_traits::Zero;

use super::dd::{dd_h_to_v, ConeH};
use super::linalg::{canonicalize, clear_denominators, dot_rat};
use crate::{Int, Rat};

/// An irredundant facet system `{ x : <normal_i, x> <= offset_i }` together
/// with the affine-hull equations `<coeffs_j, x> = value_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetList {
    pub facets: Vec<(Vec<Int>, Int)>,
    pub equations: Vec<(Vec<Int>, Int)>,
}

/// Complete, irredundant facet list of the convex hull of `points`
/// (duplicates and interior points allowed).
pub fn facets_from_vertices(points: &[Vec<Rat>]) -> FacetList {
    assert!(!points.is_empty(), "need at least one point");
    let d = points[0].len();
    let rows: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut hom: Vec<Rat> = p.clone();
            hom.push(Rat::from(Int::from(1)));
            clear_denominators(&hom)
        })
        .collect();
    let dual = dd_h_to_v(&ConeH::new(d + 1, rows));

    let mut facets = Vec::new();
    for ray in &dual.rays {
        let (a, b) = ray.split_at(d);
        if a.iter().all(|x| x.is_zero()) {
            // The trivial inequality 0 <= b survives as an extreme ray only
            // for a zero-dimensional hull; it is not a facet.
            continue;
        }
        let normal: Vec<Int> = a.iter().map(|x| -x).collect();
        facets.push((normal, b[0].clone()));
    }
    facets.sort();

    let mut equations = Vec::new();
    for l in &dual.lineality {
        // <a, x> + b = 0, so the equation reads <a, x> = -b.
        let (a, b) = l.split_at(d);
        let mut row = a.to_vec();
        row.push(-b[0].clone());
        let row = canonicalize(&row);
        equations.push((row[..d].to_vec(), row[d].clone()));
    }
    equations.sort();

    FacetList { facets, equations }
}

/// Does the point satisfy every facet and every equation?
pub fn facets_contain(list: &FacetList, x: &[Rat]) -> bool {
    list.facets
        .iter()
        .all(|(n, b)| dot_rat(n, x) <= Rat::from(b.clone()))
        && list
            .equations
            .iter()
            .all(|(n, b)| dot_rat(n, x) == Rat::from(b.clone()))
}

/// Canonical form of an inequality `<n, x> <= b` modulo the affine-hull
/// equations: joint vectors (n | b) are reduced against the echelonized
/// equation rows (a sign-free operation on inequalities) and positively
/// rescaled. Two valid inequalities describe the same halfspace of the
/// affine hull iff their canonical forms agree.
pub fn canonical_facet_mod_equations(
    list: &FacetList,
    normal: &[Int],
    offset: &Int,
) -> (Vec<Int>, Int) {
    let eq_basis = super::dd::echelon_basis(
        &list
            .equations
            .iter()
            .map(|(c, v)| {
                let mut joint = c.clone();
                joint.push(v.clone());
                joint
            })
            .collect::<Vec<_>>(),
    );
    let mut joint = normal.to_vec();
    joint.push(offset.clone());
    super::dd::reduce_modulo(&mut joint, &eq_basis);
    let b = joint.pop().unwrap();
    (joint, b)
}

/// True iff the list contains a facet equal to `<normal, x> <= offset` up to
/// the affine-hull equations.
pub fn has_equivalent_facet(list: &FacetList, normal: &[Int], offset: &Int) -> bool {
    let target = canonical_facet_mod_equations(list, normal, offset);
    list.facets
        .iter()
        .any(|(n, b)| canonical_facet_mod_equations(list, n, b) == target)
}
