//! Exact rational linear algebra and polyhedral cone computations.
//!
//! All persisted data is integer after clearing denominators; rational
//! scalars appear only transiently. No floating point anywhere.

pub mod dd;
pub mod facets;
pub mod linalg;

pub use dd::{cone_dim, dd_h_to_v, rederive_h, strict_interior_point, ConeH, ConeV, DdState};
pub use facets::{facets_contain, facets_from_vertices, FacetList};
pub use linalg::{affine_rank, canonicalize, clear_denominators, dot, dot_rat, rank, rank_rat};
