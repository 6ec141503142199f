//! Exact symbolic engine for the graded ideal zeta functions of free
//! nilpotent Lie rings: the catalog of closed forms W(X, Y) (X = q,
//! Y = q^{-s}), their reduced and topological limits and special values, and
//! an independent brute-force p-adic enumerator that cross-verifies every
//! closed form.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere.  Every value is immutable after construction and
//! every operation is pure, so the whole crate is safe to use from multiple
//! threads.

pub mod analysis;
pub mod catalog;
pub mod eps;
pub mod errors;
pub mod frat;
pub mod igusa;
pub mod oracle;
pub mod overlap;
pub mod poly;
pub mod qcombo;
pub mod srat;
pub mod verify;

pub use errors::{AnalysisError, CatalogError, ExactError, OracleError, OverlapError};
pub use frat::{BinomFactor, FactoredRat};
pub use poly::{BivariatePoly, Rational};
pub use qcombo::Partition;
pub use srat::{SPoly, SRat};
