use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar is not a monomial and has no inverse in the Laurent ring: {0}")]
    NotAMonomial(String),
    #[error("no value assigned to parameter `{0}`")]
    MissingParameter(String),
    #[error("parameter `{0}` is zero but occurs with a negative exponent")]
    ZeroAtNegativeExponent(String),
    #[error("denominator divisible by {0}")]
    DenominatorDivisibleByP(u64),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("operators live on different spaces")]
    SpaceMismatch,
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("operator is singular")]
    Singular,
    #[error("symbolic inversion needs a non-monomial pivot")]
    SymbolicNotMonomialInvertible,
    #[error("operator does not commute with alpha tensor alpha")]
    IncompatiblePair,
    #[error("operator does not satisfy the Yang-Baxter equation")]
    NotYbeSolution,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("bad dimension {0}")]
    BadDimension(usize),
    #[error("invalid support pattern: {0}")]
    InvalidPattern(String),
    #[error("linear map is not a Lie algebra morphism")]
    NotAMorphism,
    #[error("parameter constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("morphism not covered by any family: {0}")]
    UnclassifiedMorphismFound(String),
    #[error("Hom-Lie invariant violated: {0}")]
    InvariantViolated(String),
    #[error("twisting map is singular")]
    AlphaSingular,
    #[error("operator is not a solution of the Hom-Yang-Baxter equation")]
    NotASolution,
    #[error("operator is not invertible")]
    NotInvertible,
    #[error("axiom violated: {0}")]
    AxiomViolation(String),
    #[error("Yetter-Drinfel'd condition fails")]
    NotYd,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
