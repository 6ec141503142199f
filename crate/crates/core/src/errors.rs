//! Error types shared across the crate.

use thiserror::Error;

/// Errors from exact polynomial and series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Exact division was requested but no exact quotient exists.  In this
    /// crate that always signals a formula-assembly bug upstream.
    #[error("polynomial division left a remainder")]
    NotDivisible,
    /// The epsilon-expansion produced a nonzero coefficient below the stated
    /// pole order, i.e. the caller's rank (or the formula) is wrong.
    #[error("nonzero coefficient below epsilon^(-{rank})")]
    PoleOrderExceeded { rank: u32 },
}

/// Errors from the overlap-word combinatorics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OverlapError {
    #[error("word violates the admissibility condition hat(M_i) >= N_i")]
    Inadmissible,
    #[error("nu is not dominated by the inflated partition")]
    NotDominated,
    #[error("word is not one of the tabulated 2D-words")]
    UnknownWord,
}

/// Errors from the catalog of rings and printed constants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown constant name: {0}")]
    UnknownConstant(String),
}

/// Errors from derived objects (reduced, topological, special values).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("cannot cancel the pole at Y = 1")]
    PoleAtOne,
    #[error("special value at Y = 1 still depends on q")]
    DependsOnQ,
    #[error("pole order at the evaluation point differs from the stated one")]
    WrongPoleOrder,
    #[error("degree in s differs from the stated one")]
    WrongDegree,
    #[error("numerator cannot be normalized to constant term 1")]
    NormalizationFailed,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Errors from the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration exceeds the work cap ({cap} units)")]
    TooLarge { cap: u64 },
    #[error("unsupported (c, d) = ({c}, {d}) for Hall-basis construction")]
    UnsupportedParams { c: u32, d: u32 },
}
