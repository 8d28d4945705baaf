use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic 2 base fields are not supported")]
    EvenCharacteristic,
    #[error("modulus {0} is not an odd prime")]
    BadModulus(u64),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("defining polynomial must have degree >= 1")]
    DegreeTooSmall,
    #[error("defining polynomial is not squarefree")]
    NotSquarefree,
    #[error("division by zero polynomial")]
    ZeroPolynomial,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("operation requires an odd-degree model (transform the curve first)")]
    EvenDegreeModel,
    #[error("no rational Weierstrass point: cannot move one to infinity")]
    NoRationalWeierstrass,
    #[error("operation requires a finite base field")]
    NotFiniteField,
    #[error("ambient rank mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("instance too large: {0}")]
    GuardExceeded(String),
    #[error("gluing fibers must consist of pairwise distinct points on the curve")]
    RepeatedGluePoint,
    #[error("each gluing fiber needs at least two points")]
    FiberTooSmall,
    #[error("zero torus coordinate lies on the compactification boundary, not in J(X)")]
    ZeroTorusCoordinate,
    #[error("could not find a representative avoiding the marked points: {0}")]
    AvoidanceFailed(String),
    #[error("fewer than two good primes within budget")]
    TooFewGoodPrimes,
    #[error("operation requires a curve over Q; over a finite field every class is torsion")]
    FiniteFieldInput,
    #[error("the two points must be distinct")]
    IdenticalPoints,
    #[error("cover degrees must satisfy h >= 1 and k >= 0")]
    InvalidCsiInput,
    #[error("invalid selection request: {0}")]
    InvalidSelection(String),
    #[error("rational function has a zero or pole at the evaluation point")]
    ValueUndefined,
    #[error("divisor support must consist of rational points of the model")]
    UnsupportedDivisorPoint,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
