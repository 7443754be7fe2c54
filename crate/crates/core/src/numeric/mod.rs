//! Scalar, polynomial, determinant and series foundations.

mod complex;
mod matrix;
mod poly;
mod series;

pub use complex::{cubic_roots, vandermonde_det, ComplexF, CubicRoots};
pub use matrix::{det3, Mat3};
pub use poly::{Poly, RatFun, RatFunError};
pub use series::{series_expand, PowerSeries, SeriesError};

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Exact fraction, always reduced with a positive denominator.
pub type ExactRat = BigRational;

/// Commutative ring operations needed by [`det3`] and [`Mat3`] products.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

pub fn rat(num: i64, den: i64) -> ExactRat {
    ExactRat::new(ExactInt::from(num), ExactInt::from(den))
}

pub fn rat_from_int(v: ExactInt) -> ExactRat {
    ExactRat::from_integer(v)
}

/// `base^exp` for any integer exponent.
///
/// Panics if `base` is zero and `exp` is negative; callers are expected to
/// reject such points first.
pub fn rat_pow(base: &ExactRat, exp: i64) -> ExactRat {
    let mag = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        mag.recip()
    } else {
        mag
    }
}

pub fn int_pow(base: &ExactInt, exp: u32) -> ExactInt {
    num_traits::pow(base.clone(), exp as usize)
}

/// Binomial coefficient `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if k < 0 || n < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The Waring coefficient `n/(n−j) · C(n−j, j)`, an integer for `n ≥ 1`.
pub fn waring_coeff(n: i64, j: i64) -> ExactInt {
    debug_assert!(n >= 1 && 2 * j <= n);
    let scaled = binomial(n - j, j) * n;
    let (q, r) = num_integer::Integer::div_rem(&scaled, &ExactInt::from(n - j));
    debug_assert!(r.is_zero());
    q
}

/// `(−1)^k` as ±1.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
