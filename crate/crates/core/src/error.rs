use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: {0}")]
    Pole(String),

    #[error("element of Q(sqrt2, sqrt3) has no inverse: it is zero")]
    ZeroInverse,

    #[error("series does not terminate: no numerator parameter is a non-positive integer")]
    NonTerminating,

    #[error("invalid precision {0}: at least one digit is required")]
    InvalidPrecision(u32),

    #[error("independent pi formulas disagree at {digits} digits")]
    OracleDisagreement { digits: u32 },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown golden series `{0}`")]
    UnknownGolden(String),

    #[error("family `{family}` takes {expected} parameters, got {got}")]
    ParamCount {
        family: String,
        expected: usize,
        got: usize,
    },

    #[error("constraint violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    ConstraintViolation(Vec<Violation>),

    #[error("pole at instantiation: {0}")]
    PoleAtInstantiation(String),

    #[error("invalid term specification: {0}")]
    InvalidTerm(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A summation strategy could not establish its preconditions or error bound.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

/// A linear constraint form that evaluated negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub form: String,
    pub value: i64,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", self.form, self.value)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
