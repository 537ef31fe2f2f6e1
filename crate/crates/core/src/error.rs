use thiserror::Error;

/// Problems with the textual ideal description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty ideal description")]
    Empty,
    #[error("malformed monomial token `{0}`")]
    MalformedToken(String),
    #[error("negative exponent in `{0}`")]
    NegativeExponent(String),
    #[error("variable index must start at 1, found `{0}`")]
    ZeroVariableIndex(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    InconsistentRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("variable x{index} exceeds declared variable count {n}")]
    VariableOutOfRange { index: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid ideal: {0}")]
    InvalidSpec(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the staircase engine needs exactly 2 variables, got {0}")]
    StaircaseDimension(usize),
    #[error("staircase recursion exceeded depth {0}; principalization did not terminate")]
    DepthLimit(usize),
    #[error("denominator vanishes at the evaluation point")]
    VanishingDenominator,
    #[error("quadrature did not reach tolerance {tol:e} (estimated error {estimate:e})")]
    QuadratureBudget { tol: f64, estimate: f64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
