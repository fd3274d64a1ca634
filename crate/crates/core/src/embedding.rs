//! Embedding counts: how many distinct forbidden two-part patterns a
//! partition contains, the excess over one, and the six sums of that excess
//! over length-3 translation classes.

use std::collections::BTreeSet;

use crate::leading_terms::LeadingTermTable;
use crate::partition::{Color, ColoredPart, ColoredPartition, HalfInt, Sector};

/// E(π): the number of distinct two-part sub-multisets of `pi` that are
/// forbidden pairs. A pair that occurs at several positions counts once.
pub fn count_embeddings(table: &LeadingTermTable, pi: &ColoredPartition) -> u64 {
    let parts = pi.parts();
    let mut seen: BTreeSet<(ColoredPart, ColoredPart)> = BTreeSet::new();
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            if b.degree().twice() - a.degree().twice() > 2 {
                break;
            }
            if table.is_forbidden_pair(a, b) {
                seen.insert((a, b));
            }
        }
    }
    seen.len() as u64
}

/// N(π) = max(E(π) − 1, 0).
pub fn excess(table: &LeadingTermTable, pi: &ColoredPartition) -> u64 {
    count_embeddings(table, pi).saturating_sub(1)
}

/// Sums of N(π) over length-3 translation classes, keyed by the residue of
/// the class degree modulo 3. The six residues are labeled the way the
/// per-degree sums read: 3s−5/2, 3s−2, 3s−3/2, 3s−1, 3s−1/2, 3s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueClassSums {
    // Indexed by the doubled degree residue mod 6.
    sums: [u64; 6],
}

/// Display order: the three half-integer classes, then the three integer
/// classes. Each label is paired with the doubled residue it names.
pub const CLASS_ORDER: [(&str, usize); 6] = [
    ("3s-5/2", 1),
    ("3s-3/2", 3),
    ("3s-1/2", 5),
    ("3s-2", 2),
    ("3s-1", 4),
    ("3s", 0),
];

impl ResidueClassSums {
    /// Sum for the class with the given doubled degree residue mod 6.
    pub fn by_twice_residue(&self, twice_residue: usize) -> u64 {
        self.sums[twice_residue % 6]
    }

    /// (label, sum) rows in display order.
    pub fn rows(&self) -> Vec<(&'static str, u64)> {
        CLASS_ORDER
            .iter()
            .map(|&(label, idx)| (label, self.sums[idx]))
            .collect()
    }

    /// Sums for the half-integer degree classes (3s−5/2, 3s−3/2, 3s−1/2).
    pub fn half_integer_classes(&self) -> [u64; 3] {
        [self.sums[1], self.sums[3], self.sums[5]]
    }

    /// Sums for the integer degree classes (3s−2, 3s−1, 3s).
    pub fn integer_classes(&self) -> [u64; 3] {
        [self.sums[2], self.sums[4], self.sums[0]]
    }
}

/// Enumerate all length-3 colored partitions up to integer translation and
/// sum N(π) per residue class of the degree.
///
/// A translation class is represented by the member whose lowest part degree
/// lies in `[0, 1)`; all parts are kept within `window_radius` of that base.
/// Two forbidden pairs inside a length-3 partition always share a part and
/// each spans at most degree distance 1, so every class with N(π) > 0 fits
/// in a window of radius 3 and the sums are independent of the radius.
pub fn lemma22_sums(table: &LeadingTermTable, window_radius: u32) -> ResidueClassSums {
    assert!(window_radius >= 3, "window radius must be at least 3");

    let mut parts: Vec<ColoredPart> = Vec::new();
    for color in Color::ALL {
        let start = match color.sector() {
            Sector::Twisted => 1,
            Sector::Untwisted => 0,
        };
        let mut twice = start;
        while twice < 2 * window_radius as i64 {
            parts.push(
                ColoredPart::new(color, HalfInt::from_twice(twice))
                    .expect("window degrees have the right parity"),
            );
            twice += 2;
        }
    }
    parts.sort_unstable();

    let mut sums = [0u64; 6];
    for i in 0..parts.len() {
        // Normalization: the lowest part degree lies in [0, 1).
        if parts[i].degree().twice() >= 2 {
            break;
        }
        for j in i..parts.len() {
            for k in j..parts.len() {
                let pi = ColoredPartition::from_parts(vec![parts[i], parts[j], parts[k]]);
                let n = excess(table, &pi);
                if n > 0 {
                    let residue = pi.degree().twice_rem_euclid(3) as usize;
                    sums[residue] += n;
                }
            }
        }
    }

    ResidueClassSums { sums }
}
