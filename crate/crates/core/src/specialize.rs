//! Weight specializations: maps of type (s₀, s₁) sending each admitted
//! colored part to a positive integer, plus the two-class coloring consumed
//! by the two-color identity.
//!
//! With m = 4s₁ + 2s₀, the parts map as
//!
//! ```text
//! X1(-k-1/2) ↦ s0        + k m        X5(-k-1/2) ↦ s0 + 4 s1 + k m
//! X2(-k-1/2) ↦ s0 +   s1 + k m        X6(-k-1)   ↦ -s1 + (k+1) m
//! X3(-k-1/2) ↦ s0 + 2 s1 + k m        X7(-k-1)   ↦       (k+1) m
//! X4(-k-1/2) ↦ s0 + 3 s1 + k m        X8(-k)     ↦  s1 +  k    m
//! ```
//!
//! for k ≥ 0; equivalently, weight(X_c(d)) = w₀(c)·s₁ − m·d with
//! w₀ = (−2, −1, 0, 1, 2, −1, 0, 1). Class 2 comprises the parts of colors
//! 1 and 5; everything else is class 1.

use crate::leading_terms::{in_p_minus, initial_excluded_part};
use crate::partition::{Color, ColoredPart, HalfInt, Sector};
use crate::Error;

/// The class a part carries into the two-colored identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorClass {
    One,
    Two,
}

impl ColorClass {
    pub fn as_u8(self) -> u8 {
        match self {
            ColorClass::One => 1,
            ColorClass::Two => 2,
        }
    }
}

/// Class 2 for colors 1 and 5, class 1 for the rest. Structural: it does not
/// depend on the chosen (s₀, s₁).
pub fn color_class(part: ColoredPart) -> ColorClass {
    match part.color() {
        Color::X1 | Color::X5 => ColorClass::Two,
        _ => ColorClass::One,
    }
}

/// A part pushed through a specialization: its weight, class, and origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedPart {
    pub value: u64,
    pub class: ColorClass,
    pub origin: ColoredPart,
}

/// A specialization of type (s₀, s₁): a coprime pair of nonnegative integers
/// with modulus m = 4s₁ + 2s₀ > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Specialization {
    s0: u64,
    s1: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Specialization {
    pub fn new(s0: u64, s1: u64) -> Result<Specialization, Error> {
        if s0 == 0 && s1 == 0 {
            return Err(Error::InvalidSpecialization {
                s0,
                s1,
                reason: "modulus would be zero".into(),
            });
        }
        if gcd(s0, s1) != 1 {
            return Err(Error::InvalidSpecialization {
                s0,
                s1,
                reason: "s0 and s1 must be coprime".into(),
            });
        }
        Ok(Specialization { s0, s1 })
    }

    pub fn s0(self) -> u64 {
        self.s0
    }

    pub fn s1(self) -> u64 {
        self.s1
    }

    /// m = 4s₁ + 2s₀.
    pub fn modulus(self) -> u64 {
        4 * self.s1 + 2 * self.s0
    }

    /// The weight of a part in P₋.
    pub fn weight(self, part: ColoredPart) -> Result<u64, Error> {
        if !in_p_minus(part) {
            return Err(Error::OutsideDomain { part });
        }
        let w0: i64 = match part.color() {
            Color::X1 => -2,
            Color::X2 | Color::X6 => -1,
            Color::X3 | Color::X7 => 0,
            Color::X4 | Color::X8 => 1,
            Color::X5 => 2,
        };
        // weight = w0 * s1 - m * d, computed on doubled degrees (m is even).
        let half_m = (self.modulus() / 2) as i64;
        let value = w0 * self.s1 as i64 - half_m * part.degree().twice();
        debug_assert!(value >= 0, "P- weights cannot be negative");
        Ok(value as u64)
    }

    pub fn weighted(self, part: ColoredPart) -> Result<WeightedPart, Error> {
        Ok(WeightedPart {
            value: self.weight(part)?,
            class: color_class(part),
            origin: part,
        })
    }

    /// All parts of P₋ with weight ≤ `bound`, sorted by descending weight
    /// (ties by ascending chain rank). Includes X1(-1/2).
    pub fn parts_up_to(self, bound: u64) -> Vec<WeightedPart> {
        let mut out = Vec::new();
        for color in Color::ALL {
            let start_twice = match (color.sector(), color) {
                (Sector::Twisted, _) => -1,
                (_, Color::X8) => 0,
                _ => -2,
            };
            let mut twice = start_twice;
            loop {
                let part = ColoredPart::new(color, HalfInt::from_twice(twice))
                    .expect("parity-valid degree");
                let weighted = self.weighted(part).expect("parts_up_to stays in P-");
                if weighted.value > bound {
                    break;
                }
                out.push(weighted);
                twice -= 2;
            }
        }
        out.sort_unstable_by_key(|w| (std::cmp::Reverse(w.value), w.origin.color().chain_rank()));
        out
    }

    /// True when (value, class) separates all parts of weight ≤ `bound`.
    pub fn check_injectivity(self, bound: u64) -> bool {
        let mut seen: Vec<(u64, ColorClass)> = self
            .parts_up_to(bound)
            .iter()
            .map(|w| (w.value, w.class))
            .collect();
        let before = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == before
    }

    /// True when plain values (ignoring classes) separate all parts of
    /// weight ≤ `bound`.
    pub fn values_injective(self, bound: u64) -> bool {
        let mut seen: Vec<u64> = self.parts_up_to(bound).iter().map(|w| w.value).collect();
        let before = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == before
    }

    /// Residues mod m of the values the given class can take (for large
    /// weights; the finitely many boundary parts share these residues).
    pub fn class_residues(self, class: ColorClass) -> Vec<u64> {
        let m = self.modulus();
        let bases: &[u64] = match class {
            ColorClass::Two => &[0, 4],             // colors 1 and 5: s0, s0 + 4 s1
            ColorClass::One => &[1, 2, 3, 5, 6, 7], // colors 2,3,4 then 6,7,8
        };
        let mut residues: Vec<u64> = bases
            .iter()
            .map(|&b| match b {
                0..=4 => (self.s0 + b * self.s1) % m,
                5 => (m - self.s1) % m, // color 6
                6 => 0,                 // color 7
                _ => self.s1 % m,       // color 8
            })
            .collect();
        residues.sort_unstable();
        residues.dedup();
        residues
    }

    /// The weight of the part excluded by the initial condition.
    pub fn excluded_value(self) -> u64 {
        self.weight(initial_excluded_part())
            .expect("X1(-1/2) lies in P-")
    }
}
