//! Property suites for the partition order, the pattern table, and the
//! series oracles.

use proptest::prelude::*;
use std::cmp::Ordering;

use a22_basis::embedding::count_embeddings;
use a22_basis::enumerate::count_basis;
use a22_basis::qseries::{equal_up_to, TruncatedSeries};
use a22_basis::{
    Color, ColoredPart, ColoredPartition, HalfInt, LeadingTermTable, Sector, Specialization,
};
use num_bigint::BigInt;

fn part(color_index: u8, base: i64) -> ColoredPart {
    let color = Color::from_index(color_index).expect("color index in 1..=8");
    let twice = 2 * base
        + match color.sector() {
            Sector::Twisted => 1,
            Sector::Untwisted => 0,
        };
    ColoredPart::new(color, HalfInt::from_twice(twice)).expect("parity-consistent by construction")
}

fn arb_part() -> impl Strategy<Value = ColoredPart> {
    (1u8..=8, -8i64..=8).prop_map(|(c, base)| part(c, base))
}

fn arb_partition() -> impl Strategy<Value = ColoredPartition> {
    prop::collection::vec(arb_part(), 0..=7).prop_map(ColoredPartition::from_parts)
}

fn same_sector_colors(sector: Sector) -> &'static [u8] {
    match sector {
        Sector::Twisted => &[1, 2, 3, 4, 5],
        Sector::Untwisted => &[6, 7, 8],
    }
}

/// Two partitions of equal length and equal total degree: the second is the
/// first with integer degree transfers between positions and same-sector
/// recolorings, both of which preserve length, parity, and the degree sum.
fn arb_equal_frame_pair() -> impl Strategy<Value = (ColoredPartition, ColoredPartition)> {
    (
        prop::collection::vec((1u8..=8, -5i64..=5), 1..=6),
        prop::collection::vec(
            (any::<prop::sample::Index>(), any::<prop::sample::Index>()),
            0..=4,
        ),
        prop::collection::vec(any::<prop::sample::Index>(), 0..=6),
    )
        .prop_map(|(base, transfers, recolors)| {
            let first: Vec<ColoredPart> = base.iter().map(|&(c, b)| part(c, b)).collect();

            let mut degrees: Vec<i64> = base.iter().map(|&(_, b)| b).collect();
            for (i, j) in &transfers {
                let i = i.index(degrees.len());
                let j = j.index(degrees.len());
                degrees[i] += 1;
                degrees[j] -= 1;
            }
            let mut colors: Vec<u8> = base.iter().map(|&(c, _)| c).collect();
            for (pos, pick) in recolors.iter().enumerate() {
                if pos < colors.len() {
                    let sector = Color::from_index(colors[pos]).unwrap().sector();
                    let options = same_sector_colors(sector);
                    colors[pos] = options[pick.index(options.len())];
                }
            }
            let second: Vec<ColoredPart> = colors
                .iter()
                .zip(&degrees)
                .map(|(&c, &b)| part(c, b))
                .collect();

            (
                ColoredPartition::from_parts(first),
                ColoredPartition::from_parts(second),
            )
        })
}

/// All-pairs reference for the difference condition.
fn difference_r_all_pairs(table: &LeadingTermTable, pi: &ColoredPartition) -> bool {
    let parts = pi.parts();
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            if table.is_forbidden_pair(parts[i], parts[j]) {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn order_is_total_on_equal_frames((a, b) in arb_equal_frame_pair()) {
        prop_assert_eq!(a.length(), b.length());
        prop_assert_eq!(a.degree(), b.degree());
        let ab = a.compare(&b);
        let ba = b.compare(&a);
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_multiplicative(
        (mu, nu) in arb_equal_frame_pair(),
        pi in arb_partition()
    ) {
        let direct = mu.compare(&nu);
        let multiplied = pi.product(&mu).compare(&pi.product(&nu));
        prop_assert_eq!(direct, multiplied);
    }
}

proptest! {
    #[test]
    fn order_is_multiplicative_across_frames(
        mu in arb_partition(),
        nu in arb_partition(),
        pi in arb_partition()
    ) {
        // Also exercises the length and degree clauses, not just items 3-4.
        let direct = mu.compare(&nu);
        let multiplied = pi.product(&mu).compare(&pi.product(&nu));
        prop_assert_eq!(direct, multiplied);
    }

    #[test]
    fn canonical_form_is_idempotent(pi in arb_partition()) {
        let again = ColoredPartition::from_parts(pi.parts().to_vec());
        prop_assert_eq!(&again, &pi);
        let mut shuffled = pi.parts().to_vec();
        shuffled.reverse();
        prop_assert_eq!(&ColoredPartition::from_parts(shuffled), &pi);
    }

    #[test]
    fn text_round_trips(pi in arb_partition()) {
        let text = pi.to_string();
        let parsed: ColoredPartition = text.parse().unwrap();
        prop_assert_eq!(parsed, pi);
    }

    #[test]
    fn containment_is_reflexive_transitive_and_translation_compatible(
        pi in arb_partition(),
        mask_a in prop::collection::vec(any::<bool>(), 7),
        mask_b in prop::collection::vec(any::<bool>(), 7),
        shift in -5i64..=5
    ) {
        prop_assert!(pi.contains(&pi));

        let rho: ColoredPartition = pi
            .parts()
            .iter()
            .zip(&mask_a)
            .filter(|(_, &keep)| keep)
            .map(|(&p, _)| p)
            .collect();
        let tau: ColoredPartition = rho
            .parts()
            .iter()
            .zip(&mask_b)
            .filter(|(_, &keep)| keep)
            .map(|(&p, _)| p)
            .collect();
        prop_assert!(pi.contains(&rho));
        prop_assert!(rho.contains(&tau));
        prop_assert!(pi.contains(&tau));

        prop_assert_eq!(
            pi.contains(&rho),
            pi.translate(shift).contains(&rho.translate(shift))
        );
    }

    #[test]
    fn forbidden_pairs_are_symmetric_and_translation_invariant(
        a in arb_part(),
        b in arb_part(),
        shift in -6i64..=6
    ) {
        let table = LeadingTermTable::global();
        prop_assert_eq!(table.is_forbidden_pair(a, b), table.is_forbidden_pair(b, a));
        prop_assert_eq!(
            table.is_forbidden_pair(a, b),
            table.is_forbidden_pair(a.translate(shift), b.translate(shift))
        );
    }

    #[test]
    fn windowed_difference_check_equals_all_pairs(pi in arb_partition()) {
        let table = LeadingTermTable::global();
        prop_assert_eq!(
            table.satisfies_difference_r(&pi),
            difference_r_all_pairs(table, &pi)
        );
    }

    #[test]
    fn embedding_count_is_translation_invariant(pi in arb_partition(), shift in -6i64..=6) {
        let table = LeadingTermTable::global();
        prop_assert_eq!(
            count_embeddings(table, &pi),
            count_embeddings(table, &pi.translate(shift))
        );
    }

    #[test]
    fn length_two_embeddings_equal_the_pair_predicate(a in arb_part(), b in arb_part()) {
        let table = LeadingTermTable::global();
        let pi: ColoredPartition = [a, b].into_iter().collect();
        let expected = u64::from(table.is_forbidden_pair(a, b));
        prop_assert_eq!(count_embeddings(table, &pi), expected);
    }

    #[test]
    fn series_multiplication_commutes(
        a in prop::collection::vec(-20i64..=20, 1..=12),
        b in prop::collection::vec(-20i64..=20, 1..=12),
    ) {
        let order = a.len().max(b.len()) - 1;
        let pad = |v: &[i64]| {
            let mut c: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            c.resize(order + 1, BigInt::from(0));
            TruncatedSeries::from_coefficients(c)
        };
        let (sa, sb) = (pad(&a), pad(&b));
        prop_assert_eq!(sa.mul(&sb), sb.mul(&sa));
        prop_assert_eq!(&sa.mul(&TruncatedSeries::one(order)), &sa);
        prop_assert!(equal_up_to(&sa, &sa, order).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn count_vectors_are_prefix_monotone(short in 5u64..=25, extra in 1u64..=15) {
        let table = LeadingTermTable::global();
        for spec in [Specialization::new(1, 1).unwrap(), Specialization::new(2, 1).unwrap()] {
            let a = count_basis(table, spec, short).unwrap();
            let b = count_basis(table, spec, short + extra).unwrap();
            prop_assert_eq!(&b[..=short as usize], &a[..]);
        }
    }
}
