//! Lineup enumeration, facet certification, right-hand sides, and the
//! stability lifts: the end-to-end generator of exclusion inequalities.

mod enumerate;
mod facecheck;
mod generate;
mod lift;
mod rhs;
mod symbolic;

pub use enumerate::{
    enumerate_levels, enumerate_lineups, essential_form, is_coherent_sequence, Lineup,
};
pub use facecheck::{composition_of, face_dimension, is_facet_normal, maximizers};
pub use generate::{
    generate_h_representation, lineup_counts, new_facet_counts, ExclusionInequality,
    GeneratedSystem, RhsAffine,
};
pub use lift::stability_lift;
pub use rhs::rhs_of;
pub use symbolic::{check_weights, default_weight, occupation_vector, OccupationMatrix};
