//! Independent brute-force verification: Hall-basis structure constants by
//! rewriting, HNF enumeration of sublattices, graded-ideal counting at small
//! index, and submodule-type counting.
//!
//! All lattice arithmetic is exact over the integers; enumeration beyond the
//! work cap is a clean `TooLarge` error, never a silent truncation.  The cap
//! defaults to 10^7 candidate units and may be overridden per call (the CLI
//! wires it to the ZETA_ORACLE_CAP environment variable).

mod count;
mod hnf;
mod lie;

pub use count::{
    bracket_lattice, count_all_subgroups, count_graded_ideals, count_submodules_of_type,
    dirichlet_match, ring_for, verify_x_index, DEFAULT_CAP,
};
pub use hnf::{enumerate_sublattices, hnf_from_rows, smith_p_valuations, Budget, LatticeHNF};
pub use lie::{build_ring, GradedLieRing};
