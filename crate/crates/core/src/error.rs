use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the library. Every computation is exact, so the only
/// failure modes are malformed inputs, out-of-range requests and refused
/// enumeration budgets.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("profiles have different sizes: |mu| = {mu} but |nu| = {nu}")]
    ProfileSizeMismatch { mu: u64, nu: u64 },

    #[error("requested coefficient of degree {degree} but the series is truncated at {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },

    #[error("cannot invert a series with zero constant term")]
    ZeroConstantTerm,

    #[error("enumeration refused: estimated {estimate} tuples exceeds the budget {budget}")]
    BudgetExceeded { estimate: BigInt, budget: BigInt },

    #[error("{q} does not divide the profile size {d}")]
    NotADivisor { q: u32, d: u64 },

    #[error("residues violate the existence condition a_1 + ... + a_n = (2g-2+n)s mod r")]
    ExistenceCondition,

    #[error("Riemann-Roch rank is not an integer (residue bookkeeping is inconsistent)")]
    NonIntegralRank,

    #[error("weighted psi integral only has unstable conventions for (0,1) and (0,2), got n = {0}")]
    UnstableSignature(usize),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
