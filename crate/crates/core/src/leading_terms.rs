//! The forbidden two-part patterns: the printed template table, its
//! parity-consistent instantiation into 54 translation families, and the
//! difference and initial conditions those families induce on partitions.
//!
//! Each template pairs an ordered color pair with one or two degree shapes,
//! parameterized by an integer j. A shape survives only when both of its
//! degrees have the parity forced by their colors; every two-shape entry
//! realizes exactly one of its shapes and every one-shape entry realizes its
//! shape, which [`LeadingTermTable::build`] asserts. The surviving families
//! are translation-invariant sets of two-part multisets
//! `{X_low(d), X_high(d + gap)}` with gap 0, ½ or 1.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::partition::{Color, ColoredPart, ColoredPartition, HalfInt, Sector};

/// Degree gap between the two parts of a pattern family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gap {
    Zero,
    Half,
    One,
}

impl Gap {
    pub fn twice(self) -> i64 {
        match self {
            Gap::Zero => 0,
            Gap::Half => 1,
            Gap::One => 2,
        }
    }

    fn from_twice(twice: i64) -> Option<Gap> {
        match twice {
            0 => Some(Gap::Zero),
            1 => Some(Gap::Half),
            2 => Some(Gap::One),
            _ => None,
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gap::Zero => "0",
            Gap::Half => "1/2",
            Gap::One => "1",
        })
    }
}

/// One printed template entry: an ordered color pair plus the degree shapes
/// it may instantiate. Shapes are written as doubled offsets from the
/// parameter j, so (-1, -1) is (j-1/2, j-1/2) and (-2, 0) is (j-1, j).
#[derive(Debug, Clone, Copy)]
pub struct PatternTemplate {
    pub colors: (u8, u8),
    pub shapes: &'static [(i64, i64)],
}

const EQUAL_HALF_OR_SPLIT_ONE: &[(i64, i64)] = &[(-1, -1), (-2, 0)];
const SPLIT_ONE_HALF_OR_EQUAL_INT: &[(i64, i64)] = &[(-3, -1), (-2, -2)];
const SPLIT_HALF_UP: &[(i64, i64)] = &[(-1, 0)];
const SPLIT_HALF_DOWN: &[(i64, i64)] = &[(-2, -1)];

const BLOCK_1_COLORS: [(u8, u8); 15] = [
    (1, 1),
    (2, 1),
    (2, 2),
    (3, 1),
    (3, 2),
    (4, 1),
    (3, 3),
    (4, 2),
    (5, 1),
    (4, 3),
    (5, 2),
    (4, 4),
    (5, 3),
    (5, 4),
    (5, 5),
];

const BLOCK_2_COLORS: [(u8, u8); 15] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (6, 6),
    (1, 4),
    (7, 6),
    (1, 5),
    (7, 7),
    (8, 6),
    (2, 5),
    (8, 7),
    (3, 5),
    (8, 8),
    (4, 5),
    (5, 5),
];

const BLOCK_3_COLORS: [(u8, u8); 12] = [
    (1, 6),
    (1, 7),
    (2, 6),
    (1, 8),
    (2, 7),
    (2, 8),
    (3, 7),
    (4, 7),
    (3, 8),
    (4, 8),
    (5, 7),
    (5, 8),
];

const BLOCK_4_COLORS: [(u8, u8); 12] = [
    (6, 1),
    (7, 1),
    (6, 2),
    (6, 3),
    (7, 2),
    (7, 3),
    (6, 4),
    (7, 4),
    (6, 5),
    (8, 4),
    (7, 5),
    (8, 5),
];

/// The template table, block by block as printed.
pub fn templates() -> Vec<PatternTemplate> {
    let mut out = Vec::with_capacity(54);
    for &colors in &BLOCK_1_COLORS {
        out.push(PatternTemplate {
            colors,
            shapes: EQUAL_HALF_OR_SPLIT_ONE,
        });
    }
    for &colors in &BLOCK_2_COLORS {
        out.push(PatternTemplate {
            colors,
            shapes: SPLIT_ONE_HALF_OR_EQUAL_INT,
        });
    }
    for &colors in &BLOCK_3_COLORS {
        out.push(PatternTemplate {
            colors,
            shapes: SPLIT_HALF_UP,
        });
    }
    for &colors in &BLOCK_4_COLORS {
        out.push(PatternTemplate {
            colors,
            shapes: SPLIT_HALF_DOWN,
        });
    }
    out
}

/// A translation-invariant family of forbidden two-part patterns
/// `{X_low(d), X_high(d + gap)}`, d ranging over all degrees of the parity
/// forced by `low`. For gap 0 the colors are stored sorted by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternFamily {
    low: Color,
    high: Color,
    gap: Gap,
}

impl PatternFamily {
    pub fn low_color(self) -> Color {
        self.low
    }

    pub fn high_color(self) -> Color {
        self.high
    }

    pub fn gap(self) -> Gap {
        self.gap
    }

    /// Parity of the low part's degree, forced by its color.
    pub fn low_parity(self) -> Sector {
        self.low.sector()
    }

    /// The member of the family whose low part sits at the given degree.
    /// Returns None when the degree has the wrong parity.
    pub fn instance(self, low_degree: HalfInt) -> Option<(ColoredPart, ColoredPart)> {
        let low = ColoredPart::new(self.low, low_degree).ok()?;
        let high = ColoredPart::new(
            self.high,
            HalfInt::from_twice(low_degree.twice() + self.gap.twice()),
        )
        .ok()?;
        Some((low, high))
    }
}

/// Machine-readable export record for one family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub low_color: u8,
    pub high_color: u8,
    pub gap: String,
    pub low_degree_parity: String,
}

/// The compiled set of 54 pattern families with O(1) pair lookup.
#[derive(Debug)]
pub struct LeadingTermTable {
    families: Vec<PatternFamily>,
    // Indexed by [low color - 1][high color - 1][doubled gap].
    lookup: [[[bool; 3]; 8]; 8],
}

static TABLE: OnceLock<LeadingTermTable> = OnceLock::new();

impl LeadingTermTable {
    /// Instantiate the printed templates, keep the parity-consistent shapes,
    /// and compile the family set.
    ///
    /// # Panics
    ///
    /// Panics if any printed entry realizes zero or two parity-consistent
    /// shapes, or if the compiled table does not have exactly 54 families —
    /// either would indicate a transcription error in the template data.
    pub fn build() -> LeadingTermTable {
        let mut families = Vec::with_capacity(54);
        for template in templates() {
            let (c1, c2) = template.colors;
            let c1 = Color::from_index(c1).expect("template color index");
            let c2 = Color::from_index(c2).expect("template color index");
            let realized: Vec<PatternFamily> = template
                .shapes
                .iter()
                .filter_map(|&(off1, off2)| Self::realize(c1, c2, off1, off2))
                .collect();
            assert_eq!(
                realized.len(),
                1,
                "template {}{} must realize exactly one parity-consistent shape",
                c1.index(),
                c2.index()
            );
            families.push(realized[0]);
        }

        families.sort_unstable_by_key(|f: &PatternFamily| (f.gap, f.low.index(), f.high.index()));
        let before = families.len();
        families.dedup();
        assert_eq!(
            before,
            families.len(),
            "duplicate families in the template table"
        );
        assert_eq!(
            families.len(),
            54,
            "the compiled table must have 54 families"
        );

        let mut lookup = [[[false; 3]; 8]; 8];
        for family in &families {
            let lo = (family.low.index() - 1) as usize;
            let hi = (family.high.index() - 1) as usize;
            let gap = family.gap.twice() as usize;
            lookup[lo][hi][gap] = true;
            if family.gap == Gap::Zero {
                lookup[hi][lo][0] = true;
            }
        }

        LeadingTermTable { families, lookup }
    }

    /// Shared immutable instance; built on first use.
    pub fn global() -> &'static LeadingTermTable {
        TABLE.get_or_init(LeadingTermTable::build)
    }

    // Instantiate one shape at integer j: the offsets are measured from j,
    // so a doubled offset is half-integral exactly when it is odd.
    fn realize(c1: Color, c2: Color, off1: i64, off2: i64) -> Option<PatternFamily> {
        let parity_ok = |color: Color, off: i64| match color.sector() {
            Sector::Twisted => off.rem_euclid(2) == 1,
            Sector::Untwisted => off.rem_euclid(2) == 0,
        };
        if !parity_ok(c1, off1) || !parity_ok(c2, off2) {
            return None;
        }
        let gap = Gap::from_twice(off2 - off1).expect("shape gap out of range");
        let (low, high) = if gap == Gap::Zero && c2.index() < c1.index() {
            (c2, c1)
        } else {
            (c1, c2)
        };
        Some(PatternFamily { low, high, gap })
    }

    /// The families in canonical order (by gap, then colors).
    pub fn families(&self) -> &[PatternFamily] {
        &self.families
    }

    /// One export record per family, in canonical order.
    pub fn records(&self) -> Vec<FamilyRecord> {
        self.families
            .iter()
            .map(|f| FamilyRecord {
                low_color: f.low.index(),
                high_color: f.high.index(),
                gap: f.gap.to_string(),
                low_degree_parity: f.low_parity().degree_kind().to_owned(),
            })
            .collect()
    }

    /// True when the multiset {a, b} belongs to some family. Symmetric in
    /// its arguments and invariant under integer translation.
    pub fn is_forbidden_pair(&self, a: ColoredPart, b: ColoredPart) -> bool {
        let (lo, hi) = if a.degree() <= b.degree() {
            (a, b)
        } else {
            (b, a)
        };
        let gap = hi.degree().twice() - lo.degree().twice();
        if gap > 2 {
            return false;
        }
        self.lookup[(lo.color().index() - 1) as usize][(hi.color().index() - 1) as usize]
            [gap as usize]
    }

    /// True when no 2-part sub-multiset of `pi` is a forbidden pair.
    ///
    /// Only pairs at degree distance ≤ 1 can be forbidden, so the scan stops
    /// once the (degree-sorted) parts are further apart than that.
    pub fn satisfies_difference_r(&self, pi: &ColoredPartition) -> bool {
        let parts = pi.parts();
        for (i, &a) in parts.iter().enumerate() {
            for &b in &parts[i + 1..] {
                if b.degree().twice() - a.degree().twice() > 2 {
                    break;
                }
                if self.is_forbidden_pair(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// The distinguished degree-0 parts admitted into P₋.
pub fn x8_at_zero() -> ColoredPart {
    ColoredPart::new_unchecked(Color::X8, 0)
}

/// The part excluded by the initial condition.
pub fn initial_excluded_part() -> ColoredPart {
    ColoredPart::new_unchecked(Color::X1, -1)
}

/// True when the part lies in P₋: negative degree, or X8(0), or X1(-1/2).
pub fn in_p_minus(part: ColoredPart) -> bool {
    part.degree().is_negative() || part == x8_at_zero() || part == initial_excluded_part()
}

/// The initial condition: every part lies in P₋ and X1(-1/2) does not occur.
pub fn satisfies_initial(pi: &ColoredPartition) -> bool {
    pi.parts()
        .iter()
        .all(|&p| in_p_minus(p) && p != initial_excluded_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::HalfInt;

    fn part(color: u8, twice_degree: i64) -> ColoredPart {
        ColoredPart::new(
            Color::from_index(color).unwrap(),
            HalfInt::from_twice(twice_degree),
        )
        .unwrap()
    }

    fn family_triples(table: &LeadingTermTable) -> Vec<(u8, u8, i64)> {
        table
            .families()
            .iter()
            .map(|f| {
                (
                    f.low_color().index(),
                    f.high_color().index(),
                    f.gap().twice(),
                )
            })
            .collect()
    }

    #[test]
    fn table_has_54_families() {
        let table = LeadingTermTable::build();
        assert_eq!(table.families().len(), 54);
    }

    #[test]
    fn families_match_the_printed_lists() {
        // Written out independently of the template data: all 15 twisted and
        // all 6 untwisted same-degree multisets, the 9 ordered gap-1 pairs,
        // and the two blocks of 12 mixed gap-1/2 pairs.
        let mut expected: Vec<(u8, u8, i64)> = Vec::new();
        for a in 1..=5u8 {
            for b in a..=5u8 {
                expected.push((a, b, 0));
            }
        }
        for a in 6..=8u8 {
            for b in a..=8u8 {
                expected.push((a, b, 0));
            }
        }
        for &(a, b) in &[
            (1, 1),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 5),
            (3, 5),
            (4, 5),
            (5, 5),
        ] {
            expected.push((a, b, 2));
        }
        for &(a, b) in &[
            (1, 6),
            (1, 7),
            (1, 8),
            (2, 6),
            (2, 7),
            (2, 8),
            (3, 7),
            (3, 8),
            (4, 7),
            (4, 8),
            (5, 7),
            (5, 8),
        ] {
            expected.push((a, b, 1));
        }
        for &(a, b) in &[
            (6, 1),
            (6, 2),
            (6, 3),
            (6, 4),
            (6, 5),
            (7, 1),
            (7, 2),
            (7, 3),
            (7, 4),
            (7, 5),
            (8, 4),
            (8, 5),
        ] {
            expected.push((a, b, 1));
        }
        expected.sort_unstable_by_key(|&(a, b, g)| (g, a, b));

        let mut got = family_triples(LeadingTermTable::global());
        got.sort_unstable_by_key(|&(a, b, g)| (g, a, b));
        assert_eq!(got, expected);
    }

    #[test]
    fn gap_zero_blocks_are_complete() {
        let table = LeadingTermTable::global();
        let twisted = table
            .families()
            .iter()
            .filter(|f| f.gap() == Gap::Zero && f.low_parity() == Sector::Twisted)
            .count();
        let untwisted = table
            .families()
            .iter()
            .filter(|f| f.gap() == Gap::Zero && f.low_parity() == Sector::Untwisted)
            .count();
        assert_eq!(twisted, 15);
        assert_eq!(untwisted, 6);
    }

    #[test]
    fn family_instances_satisfy_parity_everywhere() {
        let table = LeadingTermTable::global();
        for family in table.families() {
            let step = match family.low_parity() {
                Sector::Twisted => 1,
                Sector::Untwisted => 0,
            };
            let mut seen = 0;
            for j in -4..=4i64 {
                let d = HalfInt::from_twice(2 * j + step);
                let (low, high) = family.instance(d).expect("parity-valid base degree");
                assert!(table.is_forbidden_pair(low, high));
                seen += 1;
            }
            assert_eq!(seen, 9);
            // The opposite parity never instantiates.
            assert!(family.instance(HalfInt::from_twice(1 - step)).is_none());
        }
    }

    #[test]
    fn forbidden_pair_examples() {
        let table = LeadingTermTable::global();
        // Gap-1 family (1,2).
        assert!(table.is_forbidden_pair(part(1, -3), part(2, -1)));
        // No family with colors (3,6) at gap 1/2.
        assert!(!table.is_forbidden_pair(part(3, -3), part(6, -2)));
        // No untwisted gap-1 family survives parity filtering.
        assert!(!table.is_forbidden_pair(part(6, -4), part(6, -2)));
        // Gap-0 family (8,8).
        assert!(table.is_forbidden_pair(part(8, 0), part(8, 0)));
    }

    #[test]
    fn forbidden_pair_is_symmetric_and_translation_invariant() {
        let table = LeadingTermTable::global();
        let samples = [
            (part(1, -3), part(2, -1)),
            (part(3, -3), part(6, -2)),
            (part(8, 0), part(8, 0)),
            (part(2, -3), part(6, -2)),
            (part(5, -1), part(7, 0)),
        ];
        for (a, b) in samples {
            assert_eq!(table.is_forbidden_pair(a, b), table.is_forbidden_pair(b, a));
            for m in -3..=3 {
                assert_eq!(
                    table.is_forbidden_pair(a, b),
                    table.is_forbidden_pair(a.translate(m), b.translate(m))
                );
            }
        }
    }

    #[test]
    fn difference_r_examples() {
        let table = LeadingTermTable::global();
        let bad: ColoredPartition = [part(2, -3), part(6, -2)].into_iter().collect();
        assert!(!table.satisfies_difference_r(&bad));

        let single: ColoredPartition = [part(4, -7)].into_iter().collect();
        assert!(table.satisfies_difference_r(&single));

        let ok: ColoredPartition = [part(8, 0), part(7, -2)].into_iter().collect();
        assert!(table.satisfies_difference_r(&ok));

        assert!(table.satisfies_difference_r(&ColoredPartition::empty()));
    }

    #[test]
    fn p_minus_membership() {
        assert!(in_p_minus(part(8, 0)));
        assert!(in_p_minus(part(1, -1)));
        assert!(!in_p_minus(part(6, 0)));
        assert!(!in_p_minus(part(7, 0)));
        assert!(!in_p_minus(part(5, 1)));
        assert!(in_p_minus(part(5, -1)));
    }

    #[test]
    fn initial_condition_excludes_x1_neg_half() {
        let with: ColoredPartition = [part(1, -1), part(8, 0)].into_iter().collect();
        assert!(!satisfies_initial(&with));
        let without: ColoredPartition = [part(2, -1), part(8, 0)].into_iter().collect();
        assert!(satisfies_initial(&without));
        let out_of_domain: ColoredPartition = [part(6, 0)].into_iter().collect();
        assert!(!satisfies_initial(&out_of_domain));
        assert!(satisfies_initial(&ColoredPartition::empty()));
    }

    #[test]
    fn records_export_is_serializable() {
        let records = LeadingTermTable::global().records();
        assert_eq!(records.len(), 54);
        let json = serde_json::to_string(&records).unwrap();
        assert!(json.contains("\"low_color\""));
        let half_gap = records.iter().filter(|r| r.gap == "1/2").count();
        assert_eq!(half_gap, 24);
    }
}
