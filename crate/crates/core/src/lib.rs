//! Exact-arithmetic toolkit for deterministic and conclusive LOCC
//! transformations between bipartite pure states.
//!
//! States are represented by their Schmidt spectra ([`SchmidtSpectrum`]),
//! stored as exact rationals with equal values merged into multiplicities.
//! This keeps k-fold tensor powers small: a spectrum with `m` distinct values
//! has at most `C(k+m-1, m-1)` distinct values in its k-th power, against
//! `dim^k` entries in the dense vector.
//!
//! Module map:
//! - [`spectrum`]: construction, tensor products and powers, entropy.
//! - [`majorization`]: majorization, deterministic convertibility, optimal
//!   conclusive probability, pairwise comparability.
//! - [`multicopy`]: multi-copy classification of incomparable pairs, p_max
//!   scans over the number of copies, conjecture evidence.
//! - [`catalysis`]: catalyst verification and grid search.
//! - [`statefile`], [`fixtures`], [`cli`]: input parsing, built-in example
//!   states and the command-line front end.

// Errors carry exact rationals for diagnostics; they are only built on the
// cold path, so the larger `Err` variant is not worth boxing.
#![allow(clippy::result_large_err)]

pub mod catalysis;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod majorization;
pub mod multicopy;
pub mod rational;
pub mod spectrum;
pub mod statefile;

pub use catalysis::{
    catalyzes, multicopy_elocc_check, search_catalyst, CatalystSearchConfig, SearchOutcome,
};
pub use error::{Error, Result};
pub use majorization::{
    compare, conclusive_pmax, converts_deterministically, majorized_by, Comparability,
};
pub use multicopy::{
    classify_pair, conjecture_scan, extremal_condition, min_deterministic_copies, pmax_mes,
    pmax_scan, strong_incomparability, Direction, PairClassification, PmaxScan, ScanRow,
    StrongBranch,
};
pub use rational::Rational;
pub use spectrum::{
    entropy, make_spectrum, maximally_entangled, tensor_power, tensor_power_dense, tensor_product,
    Entry, Limits, SchmidtSpectrum,
};
