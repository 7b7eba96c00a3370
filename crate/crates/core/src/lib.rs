//! Information geometry on finite probability simplices.
//!
//! The open simplex `P_n` of strictly positive probability vectors on
//! `n + 1` outcomes carries a distinguished family of symmetric
//! (0,2)-tensor fields. The Fisher metric is the unique family (up to
//! scale) invariant under Markov embeddings; once the embeddings are
//! deformed so that the refining kernels overlap in a single shared
//! outcome ("patched" embeddings), invariance instead singles out the
//! two-parameter family `λ·A^d + μ·A^s`. This crate implements both
//! worlds and mechanically verifies the identities that connect them:
//!
//! * [`simplex`] — points of `P_n`, sum-zero tangent vectors, and the
//!   `Z`-basis used throughout,
//! * [`embedding`] — Markov partitions and patches, their embeddings,
//!   differentials, compositions, and the section chains `H_p`,
//! * [`tensor`] — tensor-field evaluators (`g^F`, `A^d`, `A^s`,
//!   `A^{λ,μ}`), pullbacks, gram matrices, and Campbell cone metrics,
//! * [`verify`] — invariance sweeps, the conformal (C1) and parallel
//!   (C2) classification conditions, constructive λ/μ reconstruction,
//!   and Fisher–Neyman factorization checks,
//! * [`expr`] — a tiny expression grammar for cone-metric coefficients.
//!
//! Everything is generic over the [`scalar::Scalar`] backend: `f64`,
//! or exact arbitrary-precision rationals ([`Rational`]) under which
//! every in-scope identity is certified with zero tolerance.
//!
//! ```
//! use infogeo::{SimplexPoint, TangentVector, TensorField};
//!
//! let b1 = SimplexPoint::<f64>::barycenter(1);
//! let z = TangentVector::<f64>::z_basis(1, 1).unwrap();
//! let fisher = TensorField::fisher(1);
//! let v = fisher.eval(&b1, &z, &z).unwrap();
//! assert!((v - 1.0).abs() < 1e-12);
//! ```

pub mod embedding;
pub mod expr;
pub mod scalar;
pub mod simplex;
pub mod tensor;
pub mod verify;

use thiserror::Error;

pub use embedding::{h_ij, h_ijk, EmbeddingMap, MarkovPartition, MarkovPatch, Permutation, Stage};
pub use scalar::{max_abs_diff, rel_dev, Rational, Scalar, Tolerances};
pub use simplex::{SimplexPoint, TangentVector, ZCoordinates};
pub use tensor::{iota_pullback, j_pullback, ConeMetric, TensorField};
pub use verify::{CheckReport, ConditionGrid, FamilyOracle, Witness};

/// Deterministic RNG used by every sampling helper in this crate.
/// Identical seeds reproduce identical draws across runs and platforms.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand_chacha::rand_core::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Crate-wide error type.
///
/// Numeric payloads are reported as `f64` regardless of the scalar
/// backend; they are diagnostic only.
#[derive(Debug, Error)]
pub enum Error {
    #[error("weight {index} must be strictly positive, got {value}")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("weights sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },
    #[error("tangent components sum to {sum}, expected 0")]
    NotSumZero { sum: f64 },
    #[error("{name} = {value} lies outside the open interval ({lo}, {hi})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("indices must be pairwise distinct, got {index} twice")]
    IdenticalIndices { index: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },
    #[error("invalid Markov partition: {reason}")]
    InvalidPartition { reason: String },
    #[error("invalid Markov patch: {reason}")]
    InvalidPatch { reason: String },
    #[error("coordinate {index} must be strictly positive, got {value}")]
    NonPositiveCoordinate { index: usize, value: f64 },
    #[error("denominator vanished at grid cell u={u}, alpha={alpha} outside the excluded set")]
    DegenerateDenominator { u: f64, alpha: f64 },
    #[error("expected a nonnegative quadratic form, got {value}")]
    NegativeValue { value: f64 },
    #[error("prerequisite check failed: {check}")]
    PrereqFailed { check: String },
    #[error("constraint level c={c} outside the admissible interval ({lo}, {hi})")]
    InfeasibleConstraints { c: f64, lo: f64, hi: f64 },
    #[error("no interior sample found after {attempts} attempts")]
    EmptySample { attempts: u64 },
    #[error("{op} requires the floating-point backend")]
    FloatOnly { op: &'static str },
    #[error("expression syntax error: {0}")]
    ExprSyntax(String),
    #[error("expression evaluation error: {0}")]
    ExprEval(String),
}

pub type Result<T> = std::result::Result<T, Error>;
