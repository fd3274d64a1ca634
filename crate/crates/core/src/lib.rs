//! Colored-partition model of the basic module of the twisted affine Lie
//! algebra A₂⁽²⁾, together with machine verification of the two
//! Rogers–Ramanujan/Göllnitz-type partition identities its basis encodes.
//!
//! Everything is exact: degrees are half-integers stored doubled, series
//! coefficients are arbitrary-precision integers, and no floating point is
//! used anywhere.
//!
//! The crate is organized around the objects of the construction:
//!
//! - [`partition`] — colored parts `X_c(d)`, canonically sorted partitions,
//!   the linear order on them, containment, and translation;
//! - [`leading_terms`] — the 54 translation families of forbidden two-part
//!   patterns, the difference condition they induce, and the initial
//!   condition on the admitted parts;
//! - [`embedding`] — embedding counts `E(π)`, the excess `N(π)`, and the
//!   six length-3 translation-class sums;
//! - [`specialize`] — weight maps `(s₀, s₁)` from colored parts to positive
//!   integers and the two-class coloring;
//! - [`enumerate`] — exhaustive enumeration of the admissible basis
//!   monomials graded by specialized weight;
//! - [`qseries`] — exact truncated power series for the product sides;
//! - [`identity`] — the stated counting conditions, rule tables derived from
//!   the pattern families, and multi-pipeline verification reports.

pub mod embedding;
pub mod enumerate;
pub mod identity;
pub mod leading_terms;
pub mod partition;
pub mod qseries;
pub mod specialize;

mod error;

pub use error::Error;
pub use leading_terms::LeadingTermTable;
pub use partition::{Color, ColoredPart, ColoredPartition, HalfInt, Sector};
pub use specialize::{ColorClass, Specialization};
