use thiserror::Error;

/// Errors raised by the algebra, the depth engine and the constructions.
///
/// Variants fall into three groups: malformed input (`LengthMismatch`,
/// `RingMismatch`, `InvalidRing`, `InvalidComponent`, `Parse`), mathematical
/// preconditions (`ZeroIdeal`, `UnitIdeal`, `NotSquarefree`, `NonPositive`,
/// `OverlineBelowTwo`, `ParameterOutOfRange`, `TooLarge`) and internal
/// construction failures (`ConstructionBug`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {got}, ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid primary component: {0}")]
    InvalidComponent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("function must be positive everywhere, found value {0}")]
    NonPositive(u32),
    #[error("overline needs a function with minimum at least 2, found minimum {0}")]
    OverlineBelowTwo(u32),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("input too large for this computation: {0}")]
    TooLarge(String),
    #[error("construction failed an internal consistency check: {0}")]
    ConstructionBug(String),
}

impl Error {
    /// True for errors caused by a violated mathematical precondition rather
    /// than malformed input.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::LengthMismatch { .. }
                | Error::RingMismatch
                | Error::InvalidRing(_)
                | Error::InvalidComponent(_)
                | Error::Parse(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
