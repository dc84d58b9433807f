use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("{requested} variables requested, at most {max} supported")]
    TooManyVariables { requested: usize, max: usize },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("{stage} exceeded its step budget of {limit}")]
    BudgetExceeded { stage: &'static str, limit: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("symbolic power requested without a passed smoothness check")]
    SmoothnessNotChecked,

    #[error("internal contract violated: {0}")]
    ContractViolation(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl AlgebraError {
    pub fn is_budget(&self) -> bool {
        matches!(self, AlgebraError::BudgetExceeded { .. })
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
