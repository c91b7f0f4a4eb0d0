use thiserror::Error;

/// Errors raised by the counting, reconstruction and classification layers.
///
/// Several variants (`Integrality`, `WeilBoundViolation`) can only fire when
/// an upstream count is wrong; they are surfaced instead of panicking so the
/// CLI can print the witness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("bad reduction: {0}")]
    BadReduction(String),

    #[error("integrality violated: {0}")]
    Integrality(String),

    #[error("Weil bound violated: {0}")]
    WeilBoundViolation(String),

    #[error("enumeration budget exceeded: need {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("ramified branch point: {0}")]
    Ramification(String),

    #[error("prime {0} is ramified for this polynomial")]
    RamifiedPrime(u64),

    #[error("singular model: {0}")]
    SingularModel(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
