//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid index (n={n}, ell={ell}, w={w}, k={k}): {reason}")]
    InvalidIndex {
        n: i64,
        ell: i64,
        w: i64,
        k: i64,
        reason: String,
    },

    #[error("branching chain p+q >= k1 >= q >= k2 >= 0 violated by (p={p}, q={q}, k1={k1}, k2={k2})")]
    ChainViolation { p: i64, q: i64, k1: i64, k2: i64 },

    #[error("singular leading matrix at recursion step j={j}: component i={i} has j+n+ell-i+1 = 0")]
    SingularLeading { j: i64, i: usize },

    #[error("spectral degeneracy: lambda={lambda} has colliding mu_k values and back-substitution is inconsistent for k={k}")]
    SpectralDegeneracy { lambda: String, k: usize },

    #[error("L(lambda) requires n >= 0 (got n={0}); use the joint nullspace solver instead")]
    NegativeN(i64),

    #[error("joint solution space has dimension {dim}, expected 1 ({hint})")]
    NullspaceDimension { dim: usize, hint: String },

    #[error("series truncation {have} too small, need at least {need}")]
    TruncationTooSmall { have: usize, need: usize },

    #[error("components disagree at t=1 ({0}); spherical solutions must be scalar there")]
    NotScalarAtOne(String),

    #[error("series vanishes at t=1; cannot normalize")]
    ZeroAtOne,

    #[error("hypergeometric lower parameter c={c} collides with a nonpositive integer at term j={j}")]
    ParamCollision { c: String, j: usize },

    #[error("shift parameters have zero product; the polynomial multiplier is undefined")]
    ZeroShiftProduct,

    #[error("closed forms are tabulated only for ell <= 2 (got ell={0}); use the series solver")]
    UnsupportedEll(i64),

    #[error("index (n={n}, ell={ell}) is in regime `{actual}` but the requested table covers `{requested}`")]
    RegimeMismatch {
        n: i64,
        ell: i64,
        actual: &'static str,
        requested: &'static str,
    },

    #[error("negative exponent t^{exponent} under the weight integral for component i={i}; the zero pattern is violated")]
    NegativeExponent { i: usize, exponent: i64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
