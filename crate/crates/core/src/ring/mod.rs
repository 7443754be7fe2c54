//! Exact arithmetic in `Q[x]/(x³ − x − 1)`.
//!
//! The minimal polynomial is irreducible over `Q`, so the quotient is a
//! field. An identity between elements holds for every root substituted for
//! `x`, so one check here covers `α`, `β` and `γ` together. Components are
//! read as `(F)_{x²}`, `(F)_x`, `(F)_{x⁰}`.

mod calculus;

pub use calculus::{
    alpha_pow, component_product, gamma_component_pair, gamma_component_ratio, pair_diff_quot,
    pair_power_sum, perrin_combo, set_entry, set_table_check, SetTableEntry, SET_TABLE,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::numeric::{det3, rat, ExactRat, Mat3, Poly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("the zero element has no inverse")]
    NotInvertible,
    #[error("denominator (x^s - conj^s) vanishes at s = {0}")]
    DegenerateDenominator(i64),
}

/// `c2·x² + c1·x + c0`, always of degree at most two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    pub c2: ExactRat,
    pub c1: ExactRat,
    pub c0: ExactRat,
}

impl RingElem {
    pub fn new(c2: ExactRat, c1: ExactRat, c0: ExactRat) -> Self {
        RingElem { c2, c1, c0 }
    }

    pub fn from_ints(c2: i64, c1: i64, c0: i64) -> Self {
        RingElem::new(rat(c2, 1), rat(c1, 1), rat(c0, 1))
    }

    pub fn scalar(c: ExactRat) -> Self {
        RingElem::new(ExactRat::zero(), ExactRat::zero(), c)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        RingElem::from_ints(0, 1, 0)
    }

    /// Component of `x^j`, `j ∈ {0, 1, 2}`.
    pub fn component(&self, j: usize) -> &ExactRat {
        match j {
            0 => &self.c0,
            1 => &self.c1,
            2 => &self.c2,
            _ => panic!("component index {j} outside 0..=2"),
        }
    }

    pub fn scale(&self, k: &ExactRat) -> Self {
        RingElem::new(&self.c2 * k, &self.c1 * k, &self.c0 * k)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k, 1))
    }

    /// Raw product of the two quadratics, then `x⁴ → x² + x`, `x³ → x + 1`.
    pub fn mul_ref(&self, other: &RingElem) -> RingElem {
        let a = [&self.c0, &self.c1, &self.c2];
        let b = [&other.c0, &other.c1, &other.c2];
        let mut raw: [ExactRat; 5] = std::array::from_fn(|_| ExactRat::zero());
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                raw[i + j] += a[i] * b[j];
            }
        }
        reduce(raw.to_vec())
    }

    /// Inverse from the adjugate closed form in the coefficients
    /// `(d, e, f) = (c2, c1, c0)`.
    pub fn inv(&self) -> Result<RingElem, RingError> {
        let (d, e, f) = (&self.c2, &self.c1, &self.c0);
        let den = norm_det(d, e, f);
        if den.is_zero() {
            return Err(RingError::NotInvertible);
        }
        let c2 = e * e - d * d - f * d;
        let c1 = d * d - e * f;
        let c0 = d * d + f * d * rat(2, 1) + f * f - e * d - e * e;
        Ok(RingElem::new(c2 / &den, c1 / &den, c0 / den))
    }

    /// Inverse via the extended Euclidean algorithm against `x³ − x − 1`.
    pub fn inv_euclid(&self) -> Result<RingElem, RingError> {
        if self.is_zero() {
            return Err(RingError::NotInvertible);
        }
        let modulus = Poly::new(vec![rat(-1, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]);
        let (mut r0, mut r1) = (modulus, self.to_poly());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t = t0 - q * t1.clone();
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is a nonzero constant gcd
        let g = r0.coeff(0);
        if r0.degree() != Some(0) {
            return Err(RingError::NotInvertible);
        }
        Ok(RingElem::from_poly(&t0.scale(&g.recip())))
    }

    pub fn div(&self, other: &RingElem) -> Result<RingElem, RingError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Quotient from the componentwise ratio-of-determinants closed form.
    pub fn div_closed_form(&self, other: &RingElem) -> Result<RingElem, RingError> {
        let (a, b, c) = (&self.c2, &self.c1, &self.c0);
        let (d, e, f) = (&other.c2, &other.c1, &other.c0);
        let den = norm_det(d, e, f);
        if den.is_zero() {
            return Err(RingError::NotInvertible);
        }
        let m = |rows: [[&ExactRat; 3]; 3]| det3(&Mat3::from_fn(|i, j| rows[i][j].clone()));
        let dpf = d + f;
        let dpe = d + e;
        let n2 = m([[a, e, d], [b, &dpf, e], [c, d, f]]);
        let n1 = m([[&dpf, a, d], [&dpe, b, e], [e, c, f]]);
        let n0 = m([[&dpf, e, a], [&dpe, &dpf, b], [e, d, c]]);
        Ok(RingElem::new(n2 / &den, n1 / &den, n0 / den))
    }

    pub fn pow(&self, mut exp: u64) -> RingElem {
        let mut base = self.clone();
        let mut acc = RingElem::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![self.c0.clone(), self.c1.clone(), self.c2.clone()])
    }

    /// Reduces an arbitrary polynomial modulo `x³ − x − 1`.
    pub fn from_poly(p: &Poly) -> RingElem {
        reduce(p.coeffs().to_vec())
    }
}

/// `det [[d+f, e, d], [d+e, d+f, e], [e, d, f]]`, the norm of `dx² + ex + f`.
fn norm_det(d: &ExactRat, e: &ExactRat, f: &ExactRat) -> ExactRat {
    let dpf = d + f;
    det3(&Mat3::new([
        [dpf.clone(), e.clone(), d.clone()],
        [d + e, dpf, e.clone()],
        [e.clone(), d.clone(), f.clone()],
    ]))
}

fn reduce(mut coeffs: Vec<ExactRat>) -> RingElem {
    while coeffs.len() > 3 {
        let top = coeffs.pop().expect("len > 3");
        let k = coeffs.len(); // top was the x^k coefficient
        // x^k = x^{k-2} + x^{k-3}
        coeffs[k - 2] += &top;
        coeffs[k - 3] += top;
    }
    coeffs.resize(3, ExactRat::zero());
    let [c0, c1, c2]: [ExactRat; 3] = coeffs.try_into().expect("three coefficients");
    RingElem { c2, c1, c0 }
}

impl Zero for RingElem {
    fn zero() -> Self {
        RingElem::from_ints(0, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.c2.is_zero() && self.c1.is_zero() && self.c0.is_zero()
    }
}

impl One for RingElem {
    fn one() -> Self {
        RingElem::from_ints(0, 0, 1)
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, o: RingElem) -> RingElem {
        RingElem::new(self.c2 + o.c2, self.c1 + o.c1, self.c0 + o.c0)
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, o: RingElem) -> RingElem {
        RingElem::new(self.c2 - o.c2, self.c1 - o.c1, self.c0 - o.c0)
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, o: &RingElem) -> RingElem {
        RingElem::new(&self.c2 + &o.c2, &self.c1 + &o.c1, &self.c0 + &o.c0)
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, o: &RingElem) -> RingElem {
        RingElem::new(&self.c2 - &o.c2, &self.c1 - &o.c1, &self.c0 - &o.c0)
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::new(-self.c2, -self.c1, -self.c0)
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, o: RingElem) -> RingElem {
        self.mul_ref(&o)
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, o: &RingElem) -> RingElem {
        self.mul_ref(o)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x^2 + ({})x + ({})", self.c2, self.c1, self.c0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(c2: i64, c1: i64, c0: i64) -> RingElem {
        RingElem::from_ints(c2, c1, c0)
    }

    pub(crate) fn arb_elem() -> impl Strategy<Value = RingElem> {
        proptest::array::uniform3((-40i64..40, 1i64..12))
            .prop_map(|c| RingElem::new(rat(c[0].0, c[0].1), rat(c[1].0, c[1].1), rat(c[2].0, c[2].1)))
    }

    /// 1/(ex + f) with its printed specialization of the inverse.
    fn inv_linear(ev: i64, fv: i64) -> RingElem {
        let den = fv.pow(3) - ev * ev * fv + ev.pow(3);
        RingElem::new(rat(ev * ev, den), rat(-ev * fv, den), rat(fv * fv - ev * ev, den))
    }

    /// 1/(dx² + ex) with its printed specialization of the inverse.
    fn inv_no_constant(dv: i64, ev: i64) -> RingElem {
        let den = ev.pow(3) + dv.pow(3) - ev * dv * dv;
        RingElem::new(rat(ev * ev - dv * dv, den), rat(dv * dv, den), rat(dv * dv - ev * dv - ev * ev, den))
    }

    #[test]
    fn reduction_rules() {
        let x = RingElem::x();
        let x2 = e(1, 0, 0);
        assert_eq!(&x * &x2, e(0, 1, 1));
        assert_eq!(&x2 * &x2, e(1, 1, 0));
        let u = e(3, -2, 7);
        assert_eq!(&RingElem::one() * &u, u);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(RingElem::x().inv().unwrap(), e(1, 0, -1));
        assert_eq!(e(0, 1, -1).inv().unwrap(), e(1, 1, 0));
        assert_eq!(RingElem::one().inv().unwrap(), RingElem::one());
        assert_eq!(RingElem::zero().inv(), Err(RingError::NotInvertible));
        assert_eq!(RingElem::zero().inv_euclid(), Err(RingError::NotInvertible));
    }

    #[test]
    fn division_examples() {
        let x = RingElem::x();
        assert_eq!(x.div(&x).unwrap(), RingElem::one());
        let u = e(1, 0, -1);
        assert_eq!(u.div(&x).unwrap(), u.div_closed_form(&x).unwrap());
        assert_eq!(u.div(&x).unwrap(), &u * &x.inv().unwrap());
        let q = RingElem::one().div(&e(1, 1, 0)).unwrap();
        assert_eq!(q, e(0, 1, -1));
        assert_eq!(q, inv_no_constant(1, 1));
        assert_eq!(&q * &e(1, 1, 0), RingElem::one());
        assert_eq!(x.div(&RingElem::zero()), Err(RingError::NotInvertible));
    }

    #[test]
    fn special_inverse_forms() {
        for (ev, fv) in [(1, 1), (2, -3), (-5, 4), (0, 7), (3, 0)] {
            assert_eq!(e(0, ev, fv).inv().unwrap(), inv_linear(ev, fv));
        }
        for (dv, ev) in [(1, 1), (2, -3), (-5, 4), (1, 0), (0, 3)] {
            assert_eq!(e(dv, ev, 0).inv().unwrap(), inv_no_constant(dv, ev));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn inverse_routes_agree(u in arb_elem()) {
            prop_assume!(!u.is_zero());
            let a = u.inv().unwrap();
            prop_assert_eq!(&u * &a, RingElem::one());
            prop_assert_eq!(u.inv_euclid().unwrap(), a);
        }

        #[test]
        fn norm_vanishes_only_at_zero(u in arb_elem()) {
            prop_assert_eq!(norm_det(&u.c2, &u.c1, &u.c0).is_zero(), u.is_zero());
        }

        #[test]
        fn field_axioms(u in arb_elem(), v in arb_elem(), w in arb_elem()) {
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            prop_assert_eq!(&u * &(v.clone() + w.clone()), &u * &v + &u * &w);
            prop_assert_eq!(&u * &v, &v * &u);
        }

        #[test]
        fn division_routes_agree(u in arb_elem(), v in arb_elem()) {
            prop_assume!(!v.is_zero());
            prop_assert_eq!(u.div(&v).unwrap(), u.div_closed_form(&v).unwrap());
        }

        #[test]
        fn poly_round_trip_reduction(c in proptest::collection::vec(-20i64..20, 0..9)) {
            let p = Poly::new(c.iter().map(|&v| rat(v, 1)).collect());
            let x = RingElem::x();
            let by_horner = c.iter().rev().fold(RingElem::zero(), |acc, &v| &acc * &x + RingElem::from_ints(0, 0, v));
            prop_assert_eq!(RingElem::from_poly(&p), by_horner);
        }
    }
}
