//! Brute-force verification at desk scale: symmetrize occupation vectors and
//! re-derive facets generically; decide thresholdness of ideals by exact
//! separation; confirm coherence rejections.

mod simplex;
mod threshold;
mod verify;

pub use threshold::{in_configuration_hull, is_threshold, ThresholdVerdict};
pub use verify::{brute_force_h_rep, compare_h_reps, symmetrized_vertices, ComparisonReport};
