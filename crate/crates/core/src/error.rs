use thiserror::Error;

/// Errors raised while constructing or analysing codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("length n = {0} must be odd")]
    EvenLength(usize),

    #[error("length n must be positive")]
    ZeroLength,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,

    #[error("extension degree m = {0} is outside the supported range 1..=20")]
    FieldDegree(u32),

    #[error("GF(2^{m}) contains no primitive {n}-th root of unity")]
    RootOrder { n: usize, m: u32 },

    #[error("{members:?} is not a 2-cyclotomic coset modulo {n}")]
    NotACoset { n: usize, members: Vec<usize> },

    #[error("generator chain violated: {0}")]
    Divisibility(String),

    #[error("word of length {got} does not fit a code of length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("enumeration needs 2^{needed} words but the budget is 2^{budget}")]
    BudgetExceeded { needed: usize, budget: u32 },

    #[error("invalid DNA base {0:?}")]
    InvalidBase(char),

    #[error("cannot parse polynomial {0:?}")]
    PolyParse(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("construction refused: {0}")]
    Refused(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl CodeError {
    /// True when the error is a precondition failure of a construction rather
    /// than a fault in the library.
    pub fn is_refusal(&self) -> bool {
        !matches!(self, CodeError::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, CodeError>;
