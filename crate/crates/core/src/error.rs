use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole")]
    EvalAtPole,
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("empty input")]
    EmptyInput,
    #[error("Okamoto polynomial Q_{{{m},{n}}} is not tabulated")]
    UnsupportedOkamotoIndex { m: i64, n: i64 },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires rational coefficients")]
    UnsupportedField,
    #[error("scale factor must be positive")]
    NonpositiveScale,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("beta > 0 gives the irreducible case (d > 0)")]
    IrreducibleCase,
    #[error("square root of {0} is not rational")]
    IrrationalRoot(String),
    #[error("extension {0:?} produces a singular potential")]
    SingularExtension(Vec<i64>),
    #[error("invalid extension: {0}")]
    InvalidSpec(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("ladder {kind} needs {expected} step(s), extension has {found}")]
    WrongStepCount {
        kind: char,
        expected: usize,
        found: usize,
    },
    #[error("construction check failed: {0}")]
    ConstructionMismatch(String),
    #[error("explicit wavefunctions are only available for k <= 2, got k = {0}")]
    UnsupportedStepCount(usize),
    #[error("not expressible as a structured superpotential: {0}")]
    StructureError(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("zero operator")]
    ZeroOperator,
    #[error("operator order mismatch: {0}")]
    OrderMismatch(String),
    #[error("potential has a pole inside the box")]
    PoleInDomain,
    #[error("eigenvalue iteration did not converge")]
    ConvergenceFailure,
    #[error("logarithmic weight {0} is not an integer; exponential is not rational")]
    NonIntegralWeight(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
