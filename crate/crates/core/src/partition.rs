//! Colored parts and partitions: canonical form, the linear order, multiset
//! containment, translation, and the `Xc(d)` text format.
//!
//! A part `X_c(d)` pairs one of eight colors with an exact half-integer
//! degree. Colors 1..=5 span the (−1)-eigenspace of the diagram automorphism
//! and carry degrees in ℤ+½; colors 6..=8 span the fixed subalgebra and carry
//! integer degrees. Degrees are stored doubled so that no arithmetic ever
//! leaves the integers.
//!
//! A colored partition is a finite multiset of parts kept in a canonical
//! order (nondecreasing degree, ties broken by the color chain). Partitions
//! form a monoid under multiset union, and they carry the linear order used
//! to extract leading terms: longer partitions come first, then smaller
//! degree, then reverse comparison of the degree sequences, then reverse
//! comparison of the color sequences.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Eigenspace of a color under the order-2 diagram automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    /// Colors 1..=5; degrees lie in ℤ+½.
    Twisted,
    /// Colors 6..=8; degrees lie in ℤ.
    Untwisted,
}

impl Sector {
    pub(crate) fn degree_kind(self) -> &'static str {
        match self {
            Sector::Twisted => "half-integer",
            Sector::Untwisted => "integer",
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::Twisted => "twisted",
            Sector::Untwisted => "untwisted",
        })
    }
}

/// One of the eight colors X1..=X8.
///
/// The comparison chain X1 ≥ X6 ≥ X2 ≥ X7 ≥ X3 ≥ X8 ≥ X4 ≥ X5 fixes the
/// total order on colors. [`Color::chain_rank`] numbers the chain from its
/// small end, so X5 ↦ 0 and X1 ↦ 7; "smaller color" always means smaller
/// chain rank. Only equality of colors matters to the downstream identity
/// checks, so the direction of the numbering is a convention fixed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
    X7,
    X8,
}

impl Color {
    /// All colors, in index order X1..=X8.
    pub const ALL: [Color; 8] = [
        Color::X1,
        Color::X2,
        Color::X3,
        Color::X4,
        Color::X5,
        Color::X6,
        Color::X7,
        Color::X8,
    ];

    /// The 1-based index c of the color X_c.
    pub fn index(self) -> u8 {
        match self {
            Color::X1 => 1,
            Color::X2 => 2,
            Color::X3 => 3,
            Color::X4 => 4,
            Color::X5 => 5,
            Color::X6 => 6,
            Color::X7 => 7,
            Color::X8 => 8,
        }
    }

    pub fn from_index(index: u8) -> Option<Color> {
        Color::ALL.get(index.checked_sub(1)? as usize).copied()
    }

    pub fn sector(self) -> Sector {
        if self.index() <= 5 {
            Sector::Twisted
        } else {
            Sector::Untwisted
        }
    }

    /// Position in the comparison chain, counted from the small end:
    /// X5 < X4 < X8 < X3 < X7 < X2 < X6 < X1.
    pub fn chain_rank(self) -> u8 {
        match self {
            Color::X5 => 0,
            Color::X4 => 1,
            Color::X8 => 2,
            Color::X3 => 3,
            Color::X7 => 4,
            Color::X2 => 5,
            Color::X6 => 6,
            Color::X1 => 7,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", self.index())
    }
}

/// An exact half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// The half-integer with the given doubled value (`from_twice(-3)` is −3/2).
    pub const fn from_twice(twice: i64) -> HalfInt {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> HalfInt {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// Doubled residue modulo `n`, in `0..2n`.
    pub fn twice_rem_euclid(self, n: i64) -> i64 {
        self.twice.rem_euclid(2 * n)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl std::ops::Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice + 2 * rhs)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<HalfInt, Error> {
        let parse_err = || Error::Parse {
            input: s.to_owned(),
            expected: "half-integer",
        };
        if let Some(num) = s.strip_suffix("/2") {
            let twice: i64 = num.parse().map_err(|_| parse_err())?;
            if twice % 2 == 0 {
                // Normal form prints halves with an odd numerator.
                return Err(parse_err());
            }
            Ok(HalfInt::from_twice(twice))
        } else {
            let n: i64 = s.parse().map_err(|_| parse_err())?;
            Ok(HalfInt::from_int(n))
        }
    }
}

/// One colored part `X_c(d)`.
///
/// Construction enforces the parity law, so a value of this type always
/// pairs a twisted color with a half-integer degree and an untwisted color
/// with an integer degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColoredPart {
    color: Color,
    degree: HalfInt,
}

impl ColoredPart {
    pub fn new(color: Color, degree: HalfInt) -> Result<ColoredPart, Error> {
        let parity_ok = match color.sector() {
            Sector::Twisted => !degree.is_integer(),
            Sector::Untwisted => degree.is_integer(),
        };
        if parity_ok {
            Ok(ColoredPart { color, degree })
        } else {
            Err(Error::ParityViolation { color, degree })
        }
    }

    /// Construction without the parity check, for callers that already hold
    /// a valid (color, degree) pair.
    pub(crate) const fn new_unchecked(color: Color, twice_degree: i64) -> ColoredPart {
        ColoredPart {
            color,
            degree: HalfInt::from_twice(twice_degree),
        }
    }

    pub fn color(self) -> Color {
        self.color
    }

    pub fn degree(self) -> HalfInt {
        self.degree
    }

    pub fn translate(self, by: i64) -> ColoredPart {
        ColoredPart {
            color: self.color,
            degree: self.degree + by,
        }
    }
}

/// Canonical part order: nondecreasing degree, ties broken by chain rank.
impl Ord for ColoredPart {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, self.color.chain_rank()).cmp(&(other.degree, other.color.chain_rank()))
    }
}

impl PartialOrd for ColoredPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}({})", self.color.index(), self.degree)
    }
}

impl FromStr for ColoredPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColoredPart, Error> {
        let parse_err = || Error::Parse {
            input: s.to_owned(),
            expected: "colored part of the form Xc(d)",
        };
        let rest = s.strip_prefix('X').ok_or_else(parse_err)?;
        let open = rest.find('(').ok_or_else(parse_err)?;
        let color_digits = &rest[..open];
        let inner = rest[open + 1..].strip_suffix(')').ok_or_else(parse_err)?;
        let index: u8 = color_digits.parse().map_err(|_| parse_err())?;
        let color = Color::from_index(index).ok_or_else(parse_err)?;
        let degree: HalfInt = inner.parse().map_err(|_| parse_err())?;
        ColoredPart::new(color, degree)
    }
}

/// A colored partition: a finite multiset of parts in canonical order.
///
/// The empty partition is the unit of the monoid. Two partitions are equal
/// exactly when their part multisets are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    /// The empty partition: degree 0, length 0.
    pub fn empty() -> ColoredPartition {
        ColoredPartition::default()
    }

    /// Canonical form of the given multiset of parts. Idempotent: feeding a
    /// partition's own parts back in reproduces it.
    pub fn from_parts(parts: impl Into<Vec<ColoredPart>>) -> ColoredPartition {
        let mut parts = parts.into();
        parts.sort_unstable();
        ColoredPartition { parts }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total degree: the sum of the part degrees.
    pub fn degree(&self) -> HalfInt {
        HalfInt::from_twice(self.parts.iter().map(|p| p.degree().twice()).sum())
    }

    /// Monoid product: multiset union.
    pub fn product(&self, other: &ColoredPartition) -> ColoredPartition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        ColoredPartition::from_parts(parts)
    }

    /// Shift every part degree by the integer `by`.
    pub fn translate(&self, by: i64) -> ColoredPartition {
        // Integer shifts preserve both parity and the canonical order.
        ColoredPartition {
            parts: self.parts.iter().map(|p| p.translate(by)).collect(),
        }
    }

    /// True when `rho` is a sub-multiset of `self`, multiplicities included.
    pub fn contains(&self, rho: &ColoredPartition) -> bool {
        let mut mine = self.parts.iter();
        'outer: for want in &rho.parts {
            for have in mine.by_ref() {
                match have.cmp(want) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// The linear order on partitions. `Ordering::Less` means `self ≺ other`.
    ///
    /// In order: (1) longer partitions are smaller; (2) at equal length,
    /// smaller total degree is smaller; (3) at equal length and degree, the
    /// degree sequences are compared from the top; (4) at equal degree
    /// sequences, the color sequences are compared from the top via the
    /// chain rank.
    pub fn compare(&self, other: &ColoredPartition) -> Ordering {
        if self.length() != other.length() {
            // Longer is smaller.
            return other.length().cmp(&self.length());
        }
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.parts.iter().rev().zip(other.parts.iter().rev()) {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        for (a, b) in self.parts.iter().rev().zip(other.parts.iter().rev()) {
            match a.color().chain_rank().cmp(&b.color().chain_rank()) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl FromIterator<ColoredPart> for ColoredPartition {
    fn from_iter<I: IntoIterator<Item = ColoredPart>>(iter: I) -> ColoredPartition {
        ColoredPartition::from_parts(iter.into_iter().collect::<Vec<_>>())
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("1");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for ColoredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColoredPartition, Error> {
        if s == "1" {
            return Ok(ColoredPartition::empty());
        }
        let parts = s
            .split('*')
            .map(ColoredPart::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ColoredPartition::from_parts(parts))
    }
}
