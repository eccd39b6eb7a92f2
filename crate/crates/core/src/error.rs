use thiserror::Error;

/// Errors surfaced by the exact-arithmetic engine.
///
/// `NotDivisible` doubles as a correctness assertion: the symmetrization in
/// [`crate::hl`] clears all its poles through exact division, so a nonzero
/// remainder means an internal inconsistency rather than bad user input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials live over different variable universes")]
    UniverseMismatch,

    #[error("not divisible: division by ({0} - {1}) left a nonzero remainder")]
    NotDivisible(String, String),

    #[error("series has no inverse: constant term is zero")]
    NonUnitConstant,

    #[error("composition target has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series reversion requires a linear coefficient equal to 1")]
    LinearCoeffNotOne,

    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("requested z-exponent {requested} in {var} outside guaranteed-exact window [{lo}, {hi}]")]
    WindowTooNarrow {
        var: String,
        requested: i32,
        lo: i32,
        hi: i32,
    },

    #[error("formal group law axiom violated: {0}")]
    AxiomViolation(String),

    #[error("log/exp reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
