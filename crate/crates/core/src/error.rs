//! One error type for the whole crate.  Variants are domain failures, not
//! bugs: every one corresponds to a precondition a caller can check.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The weight is not pure (no integer `w` with `b_i + b_{n+1-i} = w`
    /// uniformly over the embeddings).
    #[error("weight is not pure")]
    NotPure,

    /// The per-embedding means `d^tau` differ, so there is no associated
    /// motive to speak of.
    #[error("weight is not algebraic")]
    NotAlgebraic,

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// The two weights live over fields of different degree.
    #[error("field degree mismatch between weights")]
    DegreeMismatch,

    /// A coordinate that must be an integer came out fractional.
    #[error("result has non-integral standard coordinates")]
    NonIntegralResult,

    /// Some archimedean parameter of the first weight equals one of the
    /// second at some embedding.
    #[error("cuspidal parameters are not disjoint")]
    NotDisjoint,

    /// The tensor Hodge data has a type on the diagonal `p = q`.
    #[error("tensor Hodge data has a middle type")]
    MiddleHodgeType,

    /// The restricted width is taken over an empty index set.
    #[error("restricted width undefined for rank-one factors")]
    DegenerateIndexRange,

    #[error("both ranks must be odd")]
    NotOddOdd,

    /// `n * n'` is odd, so no representative can split the unipotent
    /// dimension in half.
    #[error("unipotent dimension is odd; no balanced length exists")]
    OddDimension,

    #[error("permutation is not a minimal-length coset representative")]
    NotKostant,

    /// An operation that only makes sense at critical points was asked for
    /// at non-critical ones.
    #[error("required points are not critical")]
    NotCritical,

    #[error("input does not have the expected shape: {0}")]
    ShapeMismatch(String),

    #[error("enumeration bound exceeded: {0}")]
    TooLarge(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
