//! Exact univariate polynomials over arbitrary-precision rationals.
//!
//! Nothing in this module touches floating point.

mod dense;
pub(crate) mod interpolate;
mod shape;
mod sturm;

pub use dense::ExactPolynomial;
pub use interpolate::interpolate;
pub use shape::{gamma_expand, gamma_rebuild, is_palindromic, is_unimodal};
pub use sturm::{sturm_report, RealRootReport};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// `a` choose `b` as a falling factorial over `b!`, so `a` may be negative.
/// Returns 0 for negative `b`.
pub fn binomial(a: &BigInt, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        // Exact: a product of i + 1 consecutive integers is divisible by (i + 1)!.
        acc = acc * (a - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Shorthand for an integral rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `p/q` in lowest terms.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
