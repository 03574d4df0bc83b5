use thiserror::Error;

use crate::field::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not a supported prime characteristic")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("extended gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic of positive degree")]
    NotMonic,

    #[error("malformed structure constants: {0}")]
    BadShape(String),
    #[error("not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element e{0}")]
    BadUnit(usize),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("quotient by the whole algebra is the zero ring")]
    DegenerateQuotient,
    #[error("not a unital algebra homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("element is nilpotent")]
    NilpotentInput,
    #[error("element is invertible")]
    InvertibleInput,
    #[error("operation needs a finite base field")]
    InfiniteField,
    #[error("no total decision procedure over the rationals for this input")]
    InfiniteFieldNoDecision,
    #[error("{what}: {count} evaluations exceeds the scan limit {limit}")]
    TooLarge { what: String, count: u128, limit: u64 },

    #[error("element is not in the radical of the subspace")]
    NotInRadical,
    #[error("subspace is not a Mathieu subspace for this variant")]
    NotMathieu,
    #[error("algebra is not commutative: e{0} e{1} != e{1} e{0}")]
    NotCommutative(usize, usize),
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("a one-dimensional algebra has only trivial Mathieu subspaces")]
    OnlyTrivial,

    #[error("trace dual must be nonzero")]
    ZeroDual,
    #[error("ambient algebra is not a full matrix algebra")]
    NotMatrixAlgebra,
    #[error("expected codimension 1, found {0}")]
    WrongCodimension(usize),
    #[error("dual is a scalar multiple of the identity")]
    ScalarDual,
    #[error("matrix size must be at least 2")]
    TooSmall,
    #[error("subspace is the whole algebra")]
    NotProper,

    /// Two independent computations that must agree did not.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}
