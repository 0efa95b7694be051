use core::fmt;

use crate::rootdata::LieKind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two scalars with different generic parts were ordered against each other.
    IncomparableScalars,
    IndexOutOfRange { index: usize, min: usize, max: usize },
    InvalidRank { kind: LieKind, n: usize },
    /// The removed simple roots do not give a two-step nilpotent,
    /// non-maximal parabolic.
    NotTwoStepNonMaximal { step: usize, maximal: bool },
    EmptyRootSet,
    WrongLieType { expected: LieKind, found: LieKind },
    EqualParameters,
    NonIntegralWeight,
    LengthMismatch { expected: usize, found: usize },
    DiagonalLengthMismatch { z1: usize, z2: usize },
    InvalidGridStep,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IncomparableScalars => {
                write!(f, "scalars with different generic parts are not comparable")
            }
            Error::IndexOutOfRange { index, min, max } => {
                write!(f, "index {index} outside the valid range {min}..={max}")
            }
            Error::InvalidRank { kind, n } => write!(f, "rank n={n} is not valid for type {kind}"),
            Error::NotTwoStepNonMaximal { step, maximal } => write!(
                f,
                "parabolic is {step}-step nilpotent{}; need two-step and non-maximal",
                if *maximal { " and maximal" } else { "" }
            ),
            Error::EmptyRootSet => write!(f, "no simple roots removed"),
            Error::WrongLieType { expected, found } => {
                write!(f, "expected a type {expected} setup, found type {found}")
            }
            Error::EqualParameters => write!(f, "criterion requires z1 != z2"),
            Error::NonIntegralWeight => write!(f, "weight is not integral"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "weight has {found} entries, expected {expected}")
            }
            Error::DiagonalLengthMismatch { z1, z2 } => write!(
                f,
                "diagonal pairing needs equal-length axes (z1 has {z1}, z2 has {z2})"
            ),
            Error::InvalidGridStep => write!(f, "grid step must be positive"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
