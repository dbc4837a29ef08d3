//! Exact enumeration of m-ary increasing trees and the machinery behind it:
//! partial Bell polynomials, truncated exponential generating functions, and
//! degree-chromatic polynomials of complete graphs.
//!
//! Every headline operation is paired with an independent brute-force or
//! iterative oracle so the two can cross-check each other bit-exactly.
//!
//! The numeric kernels are generic over [`Scalar`]; production code
//! instantiates them at the exact types below ([`ExactInt`] for counts,
//! [`ExactRatio`] for intermediate coefficients). `f64` also satisfies the
//! bound for quick approximate experiments.

pub mod bell;
pub mod chromatic;
mod error;
pub mod scalar;
pub mod series;
pub mod trees;

pub use bell::{ArgSeq, BellTable};
pub use chromatic::FallingPoly;
pub use error::Error;
pub use scalar::Scalar;
pub use series::EgfSeries;
pub use trees::{TreeCountRow, WeightSeq};

/// Arbitrary-precision signed integer; the type of every final count.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational; the type of intermediate coefficients.
pub type ExactRatio = num_rational::BigRational;

/// The integer value of a rational whose reduced denominator is one.
pub fn ratio_to_int(r: &ExactRatio) -> Option<ExactInt> {
    use num_traits::One;
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}
