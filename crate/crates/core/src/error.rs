use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("variable mismatch: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("expected a univariate polynomial, found variables {0:?}")]
    NotUnivariate(Vec<String>),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial has degree 0 in `{0}`")]
    DegreeZeroIn(String),

    #[error("polynomial has non-real coefficients")]
    NonRealCoefficients,

    #[error("curve has degree {0}; at least 2 is required")]
    DegreeTooLow(u32),

    #[error("curve is a line")]
    Line,

    #[error("curve is a circle")]
    Circle,

    #[error("bidegree ({0}, {1}) out of range for degree {2}")]
    BidegreeOutOfRange(u32, u32, u32),

    #[error("complex representation violates conjugate symmetry")]
    SymmetryViolated,

    #[error("zero denominator at j = {0}: choose another index")]
    ZeroDenominator(u32),

    #[error("general-case elimination unavailable: Delta_{0} = 0")]
    GeneralEliminationUnavailable(u32),

    #[error("translate first: the degree n-1 leading coefficient vanishes")]
    TranslateFirst,

    #[error("positive-dimensional family of solutions ({0})")]
    PositiveDimensional(String),

    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors that come from violating a documented input precondition
    /// (as opposed to an analysis failure).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NonRealCoefficients
                | Error::DegreeTooLow(_)
                | Error::Line
                | Error::Circle
                | Error::Parse { .. }
                | Error::UnknownVariable(_)
                | Error::InvalidInput(_)
                | Error::VariableMismatch { .. }
        )
    }
}
