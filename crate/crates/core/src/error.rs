use crate::partition::{Color, ColoredPart, HalfInt};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A part pairs a color with a degree of the wrong parity: colors 1..=5
    /// carry degrees in ℤ+½, colors 6..=8 carry integer degrees.
    #[error("part X{}({degree}) violates the parity law: {} colors carry {} degrees",
            color.index(),
            color.sector(),
            color.sector().degree_kind())]
    ParityViolation { color: Color, degree: HalfInt },

    /// A part outside the admitted domain P₋ (negative degree, X8(0), X1(-1/2)).
    #[error("part {part} lies outside P-")]
    OutsideDomain { part: ColoredPart },

    /// The pair (s0, s1) does not define a usable specialization.
    #[error("invalid specialization ({s0},{s1}): {reason}")]
    InvalidSpecialization { s0: u64, s1: u64, reason: String },

    /// Rule derivation needs parts to be separated by (value, class); this
    /// specialization does not do so.
    #[error("specialization ({s0},{s1}) does not assign injective (value, class) pairs to parts")]
    NonInjectiveSpecialization { s0: u64, s1: u64 },

    /// Text that does not parse as the expected object.
    #[error("cannot parse {input:?} as {expected}")]
    Parse {
        input: String,
        expected: &'static str,
    },
}
