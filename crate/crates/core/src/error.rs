//! Error type shared by every module of the crate.

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::CoefficientRing;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grain must be a positive integer, got {0}")]
    InvalidGrain(i64),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("series must contain at least one coefficient")]
    EmptyCoefficients,

    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(CoefficientRing, CoefficientRing),

    #[error("leading coefficient {0} is not a unit in {1}")]
    NonUnitLead(BigInt, CoefficientRing),

    #[error("inexact division of {value} by {divisor}")]
    InexactDivision { value: BigInt, divisor: BigInt },

    #[error("scalar {0} is not invertible modulo {1}")]
    NonInvertibleScalar(BigInt, u64),

    #[error("precision shortfall: need grain-{grain} exponents below {needed}, have {available}")]
    InsufficientPrecision {
        grain: i64,
        needed: i64,
        available: i64,
    },

    #[error("coefficient index {index} outside known range [{offset}, {prec}) in grain {grain}")]
    IndexOutOfRange {
        index: i64,
        offset: i64,
        prec: i64,
        grain: i64,
    },

    #[error("series is already over a residue ring")]
    AlreadyResidues,

    #[error("nonzero coefficient at exponent {num}/{den} prevents conversion to grain {target}")]
    NonIntegralSupport { num: i64, den: i64, target: i64 },

    #[error("grain {from} cannot be rescaled to grain {to}")]
    IncompatibleGrain { from: i64, to: i64 },

    #[error("operator parameter must be positive, got {0}")]
    NonPositiveParameter(i64),

    #[error("operation requires integral (grain-1) exponents, got grain {0}")]
    RequiresIntegralGrain(i64),

    #[error("operation requires a nonnegative offset, got {0}")]
    NegativeOffset(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("prime {prime} is not coprime to the level context {level}")]
    PrimeDividesLevel { prime: u64, level: u64 },

    #[error("weight parameter must be at least 1, got {0}")]
    InvalidWeight(i64),

    #[error("operator parameters have the wrong weight kind for this operator")]
    WrongOperatorKind,

    #[error("binomial index {k} outside 0..={m}")]
    BinomialIndex { k: i64, m: i64 },

    #[error("empty extraction range for progression {step}n + {shift}")]
    EmptyExtraction { step: i64, shift: i64 },

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("generator set is not legal for the requested group flavor")]
    InvalidGenerators,

    #[error("invalid eta-quotient: {0}")]
    InvalidEtaQuotient(String),

    #[error("cannot parse eta-quotient expression: {0}")]
    EtaParse(String),

    #[error("exponent {0} is too large for this computation")]
    ExponentOverflow(i64),

    #[error("check `{check}` failed: {detail}")]
    CheckFailed { check: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
