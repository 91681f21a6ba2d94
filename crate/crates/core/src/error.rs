use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: expected {expected} variables, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("colon by the zero ideal is undefined")]
    ZeroColon,

    #[error("exponent overflow while raising {exponent} to the bracket power {q}")]
    Overflow { exponent: u64, q: u64 },

    #[error("q = {p}^{e} exceeds the supported bound 2^40")]
    PowerTooLarge { p: u64, e: u32 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("a ring needs at least one variable")]
    NoVariables,

    #[error("generator {index} is not square-free")]
    NotSquareFree { index: usize },

    #[error("the zero ideal is not a Stanley-Reisner ideal")]
    ZeroIdeal,

    #[error("the unit ideal is not a proper ideal")]
    UnitIdeal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("primary decomposition failed verification: {0}")]
    DecompositionBug(String),

    #[error("formula violation: {0}")]
    FormulaViolation(String),
}

impl Error {
    /// True for failures that signal a bug or a contradicted identity rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::DecompositionBug(_) | Error::FormulaViolation(_))
    }
}
