use num_bigint::BigUint;
use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient #{} is negative: {value}", index + 1)]
    NegativeEntry { index: usize, value: Rational },

    #[error("coefficients sum to {sum}, not 1 (deficit {deficit})")]
    SumNotOne { sum: Rational, deficit: Rational },

    #[error("tensor power would need up to {estimated} distinct entries, cap is {cap}")]
    MemoryCapExceeded { estimated: BigUint, cap: usize },

    #[error("dense expansion has {size} entries, oracle cap is {cap}")]
    OracleCapExceeded { size: BigUint, cap: u64 },

    #[error("source^{copies} does not majorize-convert to target^{copies}; evidence scan needs a deterministic base case")]
    NotDeterministicAtKPlus1 { copies: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for the resource-limit variants.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::MemoryCapExceeded { .. } | Error::OracleCapExceeded { .. }
        )
    }
}
