//! The two stated counting conditions, the pair-rule tables derived from the
//! pattern families, and the multi-pipeline verification reports.
//!
//! Each identity is checked four ways for every n up to a bound:
//!
//! 1. `basis-enumeration` — exhaustive generation of the admissible
//!    monomials under the matching specialization;
//! 2. `stated-rules` — a counter implementing the identity's stated
//!    conditions on weighted parts directly;
//! 3. `product-brute-force` — a largest-part-first partition counter for
//!    the product side's partition interpretation;
//! 4. `series-coefficient` — the coefficient of the truncated product.
//!
//! The four computations share no code paths, so agreement across all of
//! them is the verification certificate.

use std::collections::{BTreeMap, BTreeSet};
use std::num::NonZeroUsize;
use std::time::Instant;

use serde::Serialize;

use crate::enumerate;
use crate::leading_terms::LeadingTermTable;
use crate::partition::HalfInt;
use crate::qseries;
use crate::specialize::{ColorClass, Specialization};
use crate::Error;

// ---------------------------------------------------------------------------
// Stated counting conditions
// ---------------------------------------------------------------------------

/// Pair condition of the difference-5 identity: consecutive parts
/// (smaller, larger) must differ by at least 5, and differences 5..=8
/// exclude certain residues of the sum mod 16.
fn theorem_a_pair_allowed(smaller: u64, larger: u64) -> bool {
    let diff = larger - smaller;
    if diff < 5 {
        return false;
    }
    let sum = (smaller + larger) % 16;
    match diff {
        5 => !matches!(sum, 1 | 5 | 7 | 9 | 11 | 15),
        6 => !matches!(sum, 2 | 6 | 10 | 14),
        7 => !matches!(sum, 3 | 13),
        8 => !matches!(sum, 4 | 12),
        _ => true,
    }
}

/// Counts of partitions into parts ≠ 2 with consecutive differences ≥ 5 and
/// the four conditional congruence exclusions, for every n ≤ max_n.
pub fn theorem_a_counts(max_n: usize) -> Vec<u64> {
    // completions[last][rem]: ways to extend a partition whose current
    // largest part is `last` to total remainder `rem`.
    let mut completions = vec![vec![0u64; max_n + 1]; max_n + 1];
    for row in completions.iter_mut().skip(1) {
        row[0] = 1;
    }
    for rem in 1..=max_n {
        for last in 1..=max_n {
            let mut total = 0;
            for v in (last + 5)..=rem {
                if v != 2 && theorem_a_pair_allowed(last as u64, v as u64) {
                    total += completions[v][rem - v];
                }
            }
            completions[last][rem] = total;
        }
    }

    let mut counts = vec![0u64; max_n + 1];
    counts[0] = 1;
    for n in 1..=max_n {
        for first in 1..=n {
            if first != 2 {
                counts[n] += completions[first][n - first];
            }
        }
    }
    counts
}

pub fn theorem_a_count(n: usize) -> u64 {
    theorem_a_counts(n)[n]
}

/// True when (value, class) is a legal part of the two-colored identity:
/// class-2 parts are ≡ ±1 (mod 6) and greater than 1.
fn theorem_3_1_part_valid(value: u64, class: ColorClass) -> bool {
    match class {
        ColorClass::One => value >= 1,
        ColorClass::Two => value > 1 && (value % 6 == 1 || value % 6 == 5),
    }
}

/// Pair condition of the two-colored identity, in the resolved reading:
/// difference ≥ 4 always; at difference 4 both parts are class 1 and the sum
/// avoids ±4 mod 12; at difference 5 both parts are class 1; at difference 6
/// the parts are not both class 2.
fn theorem_3_1_pair_allowed(
    smaller: u64,
    smaller_class: ColorClass,
    larger: u64,
    larger_class: ColorClass,
) -> bool {
    let diff = larger - smaller;
    if diff < 4 {
        return false;
    }
    match diff {
        4 => {
            smaller_class != ColorClass::Two
                && larger_class != ColorClass::Two
                && !matches!((smaller + larger) % 12, 4 | 8)
        }
        5 => smaller_class != ColorClass::Two && larger_class != ColorClass::Two,
        6 => !(smaller_class == ColorClass::Two && larger_class == ColorClass::Two),
        _ => true,
    }
}

const CLASSES: [ColorClass; 2] = [ColorClass::One, ColorClass::Two];

/// Counts of two-colored partitions under the resolved conditions, for
/// every n ≤ max_n.
pub fn theorem_3_1_counts(max_n: usize) -> Vec<u64> {
    // table[(last, rem)][class of last]: ways to extend a partition whose
    // current largest part is `last` with that class to total remainder
    // `rem`, as in theorem_a_counts.
    let idx = |last: usize, rem: usize| last * (max_n + 1) + rem;
    let mut table = vec![[0u64; 2]; (max_n + 1) * (max_n + 1)];
    for last in 1..=max_n {
        table[idx(last, 0)] = [1, 1];
    }
    for rem in 1..=max_n {
        for last in 1..=max_n {
            let mut totals = [0u64; 2];
            for v in (last + 4)..=rem {
                for (vi, &vclass) in CLASSES.iter().enumerate() {
                    if !theorem_3_1_part_valid(v as u64, vclass) {
                        continue;
                    }
                    for (li, &lclass) in CLASSES.iter().enumerate() {
                        if theorem_3_1_pair_allowed(last as u64, lclass, v as u64, vclass) {
                            totals[li] += table[idx(v, rem - v)][vi];
                        }
                    }
                }
            }
            table[idx(last, rem)] = totals;
        }
    }

    let mut counts = vec![0u64; max_n + 1];
    counts[0] = 1;
    for n in 1..=max_n {
        for first in 1..=n {
            for (fi, &fclass) in CLASSES.iter().enumerate() {
                if theorem_3_1_part_valid(first as u64, fclass) {
                    counts[n] += table[idx(first, n - first)][fi];
                }
            }
        }
    }
    counts
}

pub fn theorem_3_1_count(n: usize) -> u64 {
    theorem_3_1_counts(n)[n]
}

// ---------------------------------------------------------------------------
// Product-side brute-force counters
// ---------------------------------------------------------------------------

/// Partitions of each n ≤ max_n into distinct odd parts, counted by a
/// largest-part-first recursion (independent of the series construction).
pub fn count_distinct_odd(max_n: usize) -> Vec<u64> {
    // memo[(n, largest allowed odd part index)]
    fn rec(n: usize, max_part: usize, memo: &mut BTreeMap<(usize, usize), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if max_part == 0 {
            return 0;
        }
        let key = (n, max_part);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut p = max_part.min(n);
        if p.is_multiple_of(2) {
            p -= 1;
        }
        while p >= 1 {
            total += rec(n - p, p.saturating_sub(2), memo);
            if p < 2 {
                break;
            }
            p -= 2;
        }
        memo.insert(key, total);
        total
    }

    let mut memo = BTreeMap::new();
    (0..=max_n).map(|n| rec(n, n, &mut memo)).collect()
}

/// Partitions of each n ≤ max_n into parts ≡ ±1 (mod 6), counted by a
/// largest-part-first recursion with repetition.
pub fn count_pm1_mod6(max_n: usize) -> Vec<u64> {
    fn largest_valid(bound: usize) -> usize {
        let mut p = bound;
        while p >= 1 {
            if p % 6 == 1 || p % 6 == 5 {
                return p;
            }
            p -= 1;
        }
        0
    }

    fn rec(n: usize, max_part: usize, memo: &mut BTreeMap<(usize, usize), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        let p = largest_valid(max_part.min(n));
        if p == 0 {
            return 0;
        }
        let key = (n, p);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // Either use p (again), or drop below it.
        let total = rec(n - p, p, memo) + rec(n, p - 1, memo);
        memo.insert(key, total);
        total
    }

    let mut memo = BTreeMap::new();
    (0..=max_n).map(|n| rec(n, n, &mut memo)).collect()
}

// ---------------------------------------------------------------------------
// Derived rule tables
// ---------------------------------------------------------------------------

/// One pattern family pushed through a specialization: the pair of weights
/// it forbids, normalized to (difference, residue of the sum, classes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairRule {
    /// Colors of the family this rule came from (low, high by degree).
    pub family: (u8, u8),
    /// Weight difference of the forbidden pair.
    pub difference: u64,
    /// Forbidden residue of the weight sum, modulo 2m.
    pub sum_residue: u64,
    /// Class of the smaller-weight part (classes sorted when the difference
    /// is 0).
    pub smaller_class: u8,
    /// Class of the larger-weight part.
    pub larger_class: u8,
}

/// The complete rule table of a specialization: the part domain plus one
/// rule per pattern family.
#[derive(Debug, Clone, Serialize)]
pub struct RuleTable {
    pub s0: u64,
    pub s1: u64,
    /// m = 4s₁ + 2s₀; sums are reduced mod 2m.
    pub modulus: u64,
    /// Weights of the parts excluded by the initial condition, with their
    /// classes.
    pub forbidden_values: Vec<(u64, u8)>,
    /// Whether plain values already separate parts (classes redundant).
    pub values_injective: bool,
    /// One rule per family, sorted by (difference, sum residue, classes).
    pub rules: Vec<PairRule>,
}

/// Push every pattern family through the specialization.
///
/// Requires (value, class) to separate parts, so that the weighted rules
/// mean the same thing as the colored families.
pub fn derive_rule_table(
    table: &LeadingTermTable,
    spec: Specialization,
) -> Result<RuleTable, Error> {
    let m = spec.modulus();
    if !spec.check_injectivity(8 * m.max(1)) {
        return Err(Error::NonInjectiveSpecialization {
            s0: spec.s0(),
            s1: spec.s1(),
        });
    }

    let mut rules = Vec::with_capacity(table.families().len());
    for family in table.families() {
        // Instantiate deep inside P₋ twice; the signature must not depend on
        // the instantiation point.
        let signature = |twice_low: i64| -> PairRule {
            let (low, high) = family
                .instance(HalfInt::from_twice(twice_low))
                .expect("parity-valid instantiation");
            let a = spec.weighted(low).expect("instance lies in P-");
            let b = spec.weighted(high).expect("instance lies in P-");
            let (small, large) = if (a.value, a.class) <= (b.value, b.class) {
                (a, b)
            } else {
                (b, a)
            };
            PairRule {
                family: (family.low_color().index(), family.high_color().index()),
                difference: large.value - small.value,
                sum_residue: (small.value + large.value) % (2 * m),
                smaller_class: small.class.as_u8(),
                larger_class: large.class.as_u8(),
            }
        };
        let base = match family.low_parity() {
            crate::partition::Sector::Twisted => -15,
            crate::partition::Sector::Untwisted => -16,
        };
        let rule = signature(base);
        assert_eq!(
            rule,
            signature(base - 2),
            "family signature must be translation-invariant"
        );
        rules.push(rule);
    }
    rules.sort_unstable_by_key(|r| (r.difference, r.sum_residue, r.smaller_class, r.larger_class));

    let excluded = crate::leading_terms::initial_excluded_part();
    let excluded = spec.weighted(excluded).expect("X1(-1/2) lies in P-");

    Ok(RuleTable {
        s0: spec.s0(),
        s1: spec.s1(),
        modulus: m,
        forbidden_values: vec![(excluded.value, excluded.class.as_u8())],
        values_injective: spec.values_injective(8 * m.max(1)),
        rules,
    })
}

impl RuleTable {
    fn spec(&self) -> Specialization {
        Specialization::new(self.s0, self.s1).expect("rule tables hold valid specializations")
    }

    fn has_rule(&self, difference: u64, sum_residue: u64, classes: (u8, u8)) -> bool {
        self.rules.iter().any(|r| {
            r.difference == difference
                && r.sum_residue == sum_residue
                && (r.smaller_class, r.larger_class) == classes
        })
    }

    /// True when every pair of legal part values at this difference is
    /// forbidden by some rule, whatever the classes.
    pub fn difference_fully_forbidden(&self, difference: u64) -> bool {
        let spec = self.spec();
        let m = self.modulus;
        // Validity of (value, class) is periodic mod m away from the lower
        // boundary; scan one full period well above it.
        for w in (2 * m + 1)..=(3 * m) {
            for c_small in CLASSES {
                if !spec.class_residues(c_small).contains(&(w % m)) {
                    continue;
                }
                for c_large in CLASSES {
                    if !spec
                        .class_residues(c_large)
                        .contains(&((w + difference) % m))
                    {
                        continue;
                    }
                    let mut classes = (c_small.as_u8(), c_large.as_u8());
                    if difference == 0 && classes.0 > classes.1 {
                        classes = (classes.1, classes.0);
                    }
                    if !self.has_rule(difference, (2 * w + difference) % (2 * m), classes) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The smallest difference not fully forbidden; differences below it are
    /// all fully forbidden.
    pub fn minimum_difference(&self) -> u64 {
        let mut d = 0;
        while self.difference_fully_forbidden(d) {
            d += 1;
        }
        d
    }

    /// Forbidden sum residues per conditional difference (differences that
    /// are neither fully forbidden nor unconstrained), ignoring classes.
    pub fn congruence_clauses(&self) -> BTreeMap<u64, BTreeSet<u64>> {
        let min = self.minimum_difference();
        let mut clauses: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
        for rule in &self.rules {
            if rule.difference >= min {
                clauses
                    .entry(rule.difference)
                    .or_default()
                    .insert(rule.sum_residue);
            }
        }
        clauses
    }

    /// Residues written as a ± list: {1, 5, 7, 9, 11, 15} mod 16 prints as
    /// "±1, ±5, ±7".
    pub fn render_residues(&self, residues: &BTreeSet<u64>) -> String {
        let two_m = 2 * self.modulus;
        let symmetric = residues
            .iter()
            .all(|&r| residues.contains(&((two_m - r) % two_m)));
        if symmetric {
            let reps: BTreeSet<u64> = residues
                .iter()
                .map(|&r| r.min((two_m - r) % two_m))
                .collect();
            reps.iter()
                .map(|r| format!("±{r}"))
                .collect::<Vec<_>>()
                .join(", ")
        } else {
            residues
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
    }

    /// Human-readable table: part domain, always-forbidden differences, and
    /// one line per conditional clause.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let two_m = 2 * self.modulus;
        out.push_str(&format!("specialization: ({},{})\n", self.s0, self.s1));
        out.push_str(&format!(
            "modulus: m = {} (pair sums reduced mod {two_m})\n",
            self.modulus
        ));
        let spec = self.spec();
        let class2 = spec
            .class_residues(ColorClass::Two)
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!(
            "class-2 values: ≡ {class2} (mod {})\n",
            self.modulus
        ));
        for &(value, class) in &self.forbidden_values {
            if self.values_injective {
                out.push_str(&format!("forbidden part values: {value}\n"));
            } else {
                out.push_str(&format!(
                    "forbidden part values: {value} in class {class}\n"
                ));
            }
        }
        let min = self.minimum_difference();
        out.push_str(&format!(
            "minimum difference between parts: {min} (differences 0..={} always forbidden)\n",
            min.saturating_sub(1)
        ));
        if self.values_injective {
            for (difference, residues) in self.congruence_clauses() {
                out.push_str(&format!(
                    "difference {difference}: sum ≢ {} (mod {two_m})\n",
                    self.render_residues(&residues)
                ));
            }
        } else {
            // Classes carry information: report rules grouped by difference
            // and class pair.
            let mut grouped: BTreeMap<(u64, (u8, u8)), BTreeSet<u64>> = BTreeMap::new();
            for rule in &self.rules {
                if rule.difference >= min {
                    grouped
                        .entry((rule.difference, (rule.smaller_class, rule.larger_class)))
                        .or_default()
                        .insert(rule.sum_residue);
                }
            }
            for ((difference, classes), residues) in grouped {
                let coverage = self.class_pair_coverage(difference, classes);
                if residues.len() as u64 == coverage {
                    out.push_str(&format!(
                        "difference {difference}: classes ({},{}) forbidden\n",
                        classes.0, classes.1
                    ));
                } else {
                    out.push_str(&format!(
                        "difference {difference}: classes ({},{}) forbidden when sum ≡ {} (mod {two_m})\n",
                        classes.0,
                        classes.1,
                        self.render_residues(&residues)
                    ));
                }
            }
        }
        out
    }

    // Number of distinct sum residues realizable by valid pairs at this
    // difference and class pair.
    fn class_pair_coverage(&self, difference: u64, classes: (u8, u8)) -> u64 {
        let spec = self.spec();
        let m = self.modulus;
        let class_of = |c: u8| {
            if c == 2 {
                ColorClass::Two
            } else {
                ColorClass::One
            }
        };
        let mut residues = BTreeSet::new();
        for w in (2 * m + 1)..=(3 * m) {
            if spec.class_residues(class_of(classes.0)).contains(&(w % m))
                && spec
                    .class_residues(class_of(classes.1))
                    .contains(&((w + difference) % m))
            {
                residues.insert((2 * w + difference) % (2 * m));
            }
        }
        residues.len() as u64
    }
}

// ---------------------------------------------------------------------------
// Multi-pipeline verification
// ---------------------------------------------------------------------------

/// Which identity to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// Difference ≥ 5, parts ≠ 2, four congruence exclusions mod 16;
    /// equals partitions into distinct odd parts. Specialization (2,1).
    TheoremA,
    /// Two-colored, difference ≥ 4, resolved clause semantics; equals
    /// partitions into parts ≡ ±1 mod 6. Specialization (1,1).
    Theorem31,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::TheoremA => "theorem-a",
            IdentityKind::Theorem31 => "theorem-3-1",
        }
    }

    pub fn specialization(self) -> Specialization {
        match self {
            IdentityKind::TheoremA => Specialization::new(2, 1),
            IdentityKind::Theorem31 => Specialization::new(1, 1),
        }
        .expect("built-in specializations are valid")
    }
}

/// Pipeline names, in report order.
pub const PIPELINES: [&str; 4] = [
    "basis-enumeration",
    "stated-rules",
    "product-brute-force",
    "series-coefficient",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u64,
    pub pipeline: String,
    pub expected: u64,
    pub got: u64,
}

/// Verification outcome: per-pipeline counts and any disagreements against
/// the basis enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub max_n: u64,
    pub counts: Vec<Vec<u64>>,
    pub mismatches: Vec<Mismatch>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn agreed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Run all four pipelines for 0..=max_n and compare them index by index.
/// Disagreements are data, not errors.
pub fn verify_identity(
    table: &LeadingTermTable,
    kind: IdentityKind,
    max_n: u64,
    workers: NonZeroUsize,
) -> VerificationReport {
    let start = Instant::now();
    let n = max_n as usize;

    let basis = enumerate::count_basis_with_workers(table, kind.specialization(), max_n, workers)
        .expect("built-in specializations yield valid part systems");
    let (rules, brute, series) = match kind {
        IdentityKind::TheoremA => (
            theorem_a_counts(n),
            count_distinct_odd(n),
            qseries::product_distinct_odd(n),
        ),
        IdentityKind::Theorem31 => (
            theorem_3_1_counts(n),
            count_pm1_mod6(n),
            qseries::product_pm1_mod6(n),
        ),
    };
    let series: Vec<u64> = series
        .coefficients()
        .iter()
        .map(|c| u64::try_from(c).expect("series coefficients fit in u64 at these scales"))
        .collect();

    let counts = vec![basis, rules, brute, series];
    let mut mismatches = Vec::new();
    for i in 0..=n {
        for (pipeline, values) in PIPELINES.iter().zip(&counts).skip(1) {
            if values[i] != counts[0][i] {
                mismatches.push(Mismatch {
                    n: i as u64,
                    pipeline: (*pipeline).to_owned(),
                    expected: counts[0][i],
                    got: values[i],
                });
            }
        }
    }

    VerificationReport {
        identity: kind.name().to_owned(),
        max_n,
        counts,
        mismatches,
        duration_ms: start.elapsed().as_millis() as u64,
    }
}
