use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::ExactRat;

/// Polynomial in one indeterminate with exact rational coefficients,
/// lowest degree first. Trailing zeros are always stripped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<ExactRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<ExactRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: ExactRat) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: ExactRat, degree: usize) -> Self {
        let mut coeffs = vec![ExactRat::zero(); degree];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactRat {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn eval(&self, at: &ExactRat) -> ExactRat {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRat::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, k: &ExactRat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ExactRat::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &c * d;
                }
            }
            quot[top - dd] = c;
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(ExactRat::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ExactRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})y")?,
                _ => write!(f, "({c})y^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatFunError {
    #[error("rational function denominator is the zero polynomial")]
    ZeroDenominator,
}

/// Quotient of two polynomials. Not kept in lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFun {
    numer: Poly,
    denom: Poly,
}

impl RatFun {
    pub fn new(numer: Poly, denom: Poly) -> Result<Self, RatFunError> {
        if denom.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        Ok(RatFun { numer, denom })
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.numer.clone() * other.denom.clone() == other.numer.clone() * self.denom.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| rat(v, 1)).collect())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!((p(&[1, 1]) - p(&[1, 1])).is_zero());
    }

    #[test]
    fn product_and_eval() {
        let q = p(&[1, 1]) * p(&[-1, 1]);
        assert_eq!(q, p(&[-1, 0, 1]));
        assert_eq!(q.eval(&rat(3, 2)), rat(5, 4));
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[-1, -1, 0, 1, 0, 2]).div_rem(&p(&[1, 1]));
        assert_eq!(q.clone() * p(&[1, 1]) + r.clone(), p(&[-1, -1, 0, 1, 0, 2]));
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn ratfun_equality_is_cross_multiplicative() {
        let a = RatFun::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = RatFun::new(p(&[1, 1]), p(&[1, 0, -1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(RatFun::new(p(&[1]), Poly::zero()).unwrap_err(), RatFunError::ZeroDenominator);
    }
}
