//! Exact truncated power series in one variable: the product-side oracles
//! for both specialized characters.
//!
//! Coefficients are arbitrary-precision integers, so nothing ever overflows
//! or rounds. Series are dense vectors of coefficients for exponents 0..=N;
//! each geometric factor is folded in with the O(N) prefix update.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A power series truncated at a fixed order N: coefficients for q^0..q^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The constant series 1 + O(q^(N+1)).
    pub fn one(order: usize) -> TruncatedSeries {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    /// Build from explicit coefficients (index = exponent).
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> TruncatedSeries {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least order 0"
        );
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, exponent: usize) -> &BigInt {
        &self.coeffs[exponent]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Cauchy product truncated at the common order.
    ///
    /// # Panics
    ///
    /// Panics if the orders differ.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(
            self.order(),
            other.order(),
            "cannot multiply series of different orders"
        );
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply by 1/(1 - q^k) in place: c[i] += c[i-k] for ascending i.
    fn fold_geometric(&mut self, k: usize) {
        for i in k..self.coeffs.len() {
            let add = self.coeffs[i - k].clone();
            self.coeffs[i] += add;
        }
    }

    /// Multiply by (1 + q^k) in place: c[i] += c[i-k] for descending i.
    fn fold_one_plus(&mut self, k: usize) {
        for i in (k..self.coeffs.len()).rev() {
            let add = self.coeffs[i - k].clone();
            self.coeffs[i] += add;
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*q^{i}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// ∏ 1/(1 − qⁿ) over n ≤ N with n ≡ ±1 (mod 6), truncated at N.
pub fn product_pm1_mod6(order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::one(order);
    for n in 1..=order {
        if n % 6 == 1 || n % 6 == 5 {
            series.fold_geometric(n);
        }
    }
    series
}

/// ∏ (1 + q^k) over odd k ≤ N, truncated at N.
pub fn product_distinct_odd(order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::one(order);
    let mut k = 1;
    while k <= order {
        series.fold_one_plus(k);
        k += 2;
    }
    series
}

/// The first disagreement between two series, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub exponent: usize,
    pub left: BigInt,
    pub right: BigInt,
}

/// Compare coefficients for all exponents ≤ `up_to`; on failure report the
/// smallest mismatching exponent together with both values.
///
/// # Panics
///
/// Panics if either series has order < `up_to`.
pub fn equal_up_to(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    up_to: usize,
) -> Result<(), CoefficientMismatch> {
    assert!(
        a.order() >= up_to && b.order() >= up_to,
        "orders must reach the comparison bound"
    );
    for n in 0..=up_to {
        if a.coefficient(n) != b.coefficient(n) {
            return Err(CoefficientMismatch {
                exponent: n,
                left: a.coefficient(n).clone(),
                right: b.coefficient(n).clone(),
            });
        }
    }
    Ok(())
}
