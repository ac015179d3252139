use core::fmt;

use crate::complex::Violation;
use crate::construction::ConstructionFailure;
use crate::face::{Face, Vertex};
use crate::flag::FlagKind;
use crate::shift::DominancePair;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidVertex { color: u32, index: u32 },
    DuplicateColor { color: u32 },
    ColorOutOfRange { color: u32, num_colors: usize },
    TooManyColors { requested: usize, max: usize },
    /// A face set that breaks a complex invariant.
    Invalid(Violation),
    NotColorShifted(DominancePair),
    FaceNotInComplex(Face),
    EmptyComplex,
    ApexColorInUse(Vertex),
    ApexIndexNotOne(Vertex),
    KindMismatch { expected: FlagKind, found: FlagKind },
    WrongNumColors { expected: usize, found: usize },
    NegativeCount { colors: crate::ColorSet, count: i64 },
    InvalidTarget(&'static str),
    Construction(ConstructionFailure),
    BudgetExhausted { nodes: u64 },
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidVertex { color, index } => {
                write!(f, "invalid vertex (color {color}, index {index}): both must be at least 1")
            }
            Error::DuplicateColor { color } => write!(f, "face has two vertices of color {color}"),
            Error::ColorOutOfRange { color, num_colors } => {
                write!(f, "color {color} outside 1..={num_colors}")
            }
            Error::TooManyColors { requested, max } => {
                write!(f, "{requested} colors requested, at most {max} supported")
            }
            Error::Invalid(v) => write!(f, "invalid complex: {v}"),
            Error::NotColorShifted(w) => write!(f, "complex is not color-shifted: {w}"),
            Error::FaceNotInComplex(face) => write!(f, "face {face} is not in the complex"),
            Error::EmptyComplex => f.write_str("complex has no faces"),
            Error::ApexColorInUse(v) => write!(f, "apex {v}: color {} already used", v.color),
            Error::ApexIndexNotOne(v) => write!(f, "apex {v}: index must be 1"),
            Error::KindMismatch { expected, found } => {
                write!(f, "expected a flag {expected}-vector, found a flag {found}-vector")
            }
            Error::WrongNumColors { expected, found } => {
                write!(f, "expected {expected} colors, found {found}")
            }
            Error::NegativeCount { colors, count } => {
                write!(f, "negative count {count} for color set {colors}")
            }
            Error::InvalidTarget(why) => write!(f, "invalid search target: {why}"),
            Error::Construction(c) => write!(f, "construction check failed: {c}"),
            Error::BudgetExhausted { nodes } => write!(f, "search budget exhausted after {nodes} nodes"),
            Error::Overflow => f.write_str("count overflowed 64-bit arithmetic"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Invalid(v)
    }
}
