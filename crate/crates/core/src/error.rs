use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the constant term q must be nonzero")]
    ZeroConstant,
    #[error("point ({x}, {y}) is not on the conic")]
    PointNotOnConic { x: String, y: String },
    #[error("unsupported parameter range: {0}")]
    UnsupportedRange(String),
    #[error("descent exceeded {0} steps")]
    NonterminatingGuard(usize),
    #[error("{a}^2 + {b}^2 is not divisible by {a}*{b} + 1")]
    NotDivisible { a: BigInt, b: BigInt },
    #[error("certificate replay failed: {0}")]
    CertificateReplay(String),
    #[error("denominator vanishes for slope {0}")]
    DegenerateDenominator(String),
    #[error("radicands differ: {0} vs {1}")]
    RadicandMismatch(BigInt, BigInt),
    #[error("invalid quadratic element: {0}")]
    InvalidElement(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("element is zero")]
    ZeroElement,
    #[error("not a unit greater than one with norm +1")]
    NotAUnit,
    #[error("parameter outside the theorem's range: {0}")]
    ParameterOutOfTheoremRange(String),
    #[error("|k| must exceed 2, got {0}")]
    DegenerateK(BigInt),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("coordinate {0} is odd")]
    OddCoordinate(BigInt),
    #[error("degenerate chord construction: {0}")]
    DegenerateConstruction(String),
    #[error("second root is not integral: {0}")]
    NonIntegralJump(String),
    #[error("radicand {0} must not be a perfect square")]
    NonSquareRequired(BigInt),
    #[error("{0} exceeds the trial-division limit")]
    FactorizationTooLarge(BigInt),
    #[error("bound must be at least 1")]
    InvalidBound,
    #[error("no unit found for radicand {0} within the search limit")]
    UnitSearchExhausted(BigInt),
    #[error("unit reduction did not settle after {0} adjustments")]
    ReductionDiverged(usize),
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
}

impl Error {
    pub(crate) fn off_conic(x: &BigInt, y: &BigInt) -> Self {
        Error::PointNotOnConic {
            x: x.to_string(),
            y: y.to_string(),
        }
    }

    /// True for errors that indicate a broken internal invariant rather than
    /// bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::NonterminatingGuard(_)
                | Error::CertificateReplay(_)
                | Error::ReductionDiverged(_)
                | Error::OracleDisagreement(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
