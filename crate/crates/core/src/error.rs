use thiserror::Error;

/// Errors shared by all modules of the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("undeclared identifier `{0}`")]
    UndeclaredIdentifier(String),
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("negative exponent at byte {0}")]
    NegativeExponent(usize),
    #[error("cannot differentiate with respect to parameter `{0}`")]
    DerivativeOfParameter(String),
    #[error("the zero polynomial has no quasi-degree")]
    ZeroPolynomial,
    #[error("not quasi-homogeneous: terms `{0}` and `{1}` have different weighted degrees")]
    NotQuasiHomogeneous(String, String),
    #[error("context has no weights")]
    MissingWeights,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("`{0}` does not divide `{1}`")]
    NotDivisible(String, String),
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("cannot contract a degree-zero multivector")]
    DegreeZero,
    #[error("Pfaffian requires an even number of variables, got {0}")]
    OddDimension(usize),
    #[error("Pfaffian requires a bivector, got degree {0}")]
    NotBivector(usize),
    #[error("parameter `{0}` must be specialized to a rational before this computation")]
    ParameterNotSpecialized(String),
    #[error("computation budget exceeded: {0}")]
    Budget(String),
    #[error("conflicting bracket entries for pair ({0}, {1})")]
    DuplicateConflictingPair(String, String),
    #[error("bracket pair ({0}, {0}) pairs a variable with itself")]
    SelfPair(String),
    #[error("component `{0}` of the contraction is not divisible by the Pfaffian: structure is not logarithmic")]
    NotLogarithmic(String),
    #[error("the Pfaffian vanishes identically")]
    ZeroPfaffian,
    #[error("expected exactly {expected} variables, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("the singularity is not isolated (infinite Milnor number)")]
    NonIsolated,
    #[error("class is not a total Chern class (degree-zero part must be 1)")]
    NotTotalChernClass,
    #[error("expected a homogeneous class of degree 3, got mixed or wrong degree")]
    WrongDegree,
    #[error("degree {0} is outside the supported range for this family")]
    DegreeOutOfRange(i64),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
