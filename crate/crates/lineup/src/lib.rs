//! Exact-arithmetic toolkit for fermionic and bosonic spectral polytopes.
//!
//! The crate generates minimal H-representations (generalized exclusion
//! principles) of the spectral polytopes attached to the convex ensemble
//! 1-body N-representability problem, verifies them against brute-force
//! oracles at desk scale, lifts base cases to arbitrary particle number and
//! orbital count via the stability maps, and answers membership queries for
//! candidate spectra.
//!
//! Everything is exact: integers are arbitrary precision, rationals appear
//! only where a weight vector is evaluated, and no floating point is used on
//! any decision path.

pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod geom;
pub mod oracle;

pub mod cli;

pub use combinatorics::{Configuration, GaleIdeal, Params, Statistics};
pub use engine::{ExclusionInequality, GeneratedSystem, Lineup, OccupationMatrix};
pub use error::{Error, Result};

/// Big integer scalar used throughout.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn int(v: i64) -> Int {
    Int::from(v)
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
