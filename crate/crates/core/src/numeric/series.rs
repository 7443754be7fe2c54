use num_traits::Zero;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

use super::{ExactRat, RatFun};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator has zero constant term; no Maclaurin expansion")]
    ZeroConstantTerm,
}

/// Truncated power series `c₀ + c₁y + … + c_N y^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    pub coeffs: Vec<ExactRat>,
}

impl PowerSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Maclaurin coefficients `c₀..c_order` of `f`.
///
/// Uses the recurrence `d₀cₖ = nₖ − Σ_{i≥1} dᵢcₖ₋ᵢ` read off from
/// `numer = denom · series`.
pub fn series_expand(f: &RatFun, order: usize) -> Result<PowerSeries, SeriesError> {
    let denom = f.denom().coeffs();
    let d0 = denom
        .first()
        .filter(|c| !c.is_zero())
        .ok_or(SeriesError::ZeroConstantTerm)?;
    let inv_d0 = d0.recip();
    let mut coeffs: Vec<ExactRat> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = f.numer().coeff(k);
        for (i, d) in denom.iter().enumerate().skip(1).take(k) {
            if !d.is_zero() {
                acc -= d * &coeffs[k - i];
            }
        }
        coeffs.push(acc * &inv_d0);
    }
    Ok(PowerSeries { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, Poly};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| rat(v, 1)).collect())
    }

    fn ints(s: &PowerSeries) -> Vec<ExactRat> {
        s.coeffs.clone()
    }

    #[test]
    fn geometric_series() {
        let f = RatFun::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(ints(&series_expand(&f, 4).unwrap()), vec![rat(1, 1); 5]);
    }

    #[test]
    fn squared_geometric() {
        // y / (1 - y)^2 = y + 2y^2 + 3y^3 + ...
        let f = RatFun::new(p(&[0, 1]), p(&[1, -2, 1])).unwrap();
        let want: Vec<_> = [0, 1, 2, 3].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(series_expand(&f, 3).unwrap().coeffs, want);
    }

    #[test]
    fn padovan_characteristic_denominator() {
        // (1 + y) / (1 - y^2 - y^3): P_0, P_1, ...
        let f = RatFun::new(p(&[1, 1]), p(&[1, 0, -1, -1])).unwrap();
        let want: Vec<_> = [1, 1, 1, 2, 2, 3, 4, 5, 7, 9].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(series_expand(&f, 9).unwrap().coeffs, want);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let f = RatFun::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(series_expand(&f, 3), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn rational_coefficients() {
        // 1 / (2 - y) = 1/2 + y/4 + y^2/8
        let f = RatFun::new(p(&[1]), p(&[2, -1])).unwrap();
        assert_eq!(series_expand(&f, 2).unwrap().coeffs, vec![rat(1, 2), rat(1, 4), rat(1, 8)]);
    }

    proptest! {
        #[test]
        fn truncation_is_consistent(
            num in proptest::collection::vec(-9i64..10, 0..5),
            den in proptest::collection::vec(-9i64..10, 0..5),
            d0 in 1i64..5,
            m in 0usize..15,
            extra in 0usize..10,
        ) {
            let mut dc = vec![d0];
            dc.extend(den);
            let f = RatFun::new(p(&num), p(&dc)).unwrap();
            let long = series_expand(&f, m + extra).unwrap();
            let short = series_expand(&f, m).unwrap();
            prop_assert_eq!(long.truncate(m), short.clone());
            // numer = denom * series + O(y^{m+1})
            let prod = f.denom().clone() * Poly::new(short.coeffs.clone());
            for k in 0..=m {
                prop_assert_eq!(prod.coeff(k), f.numer().coeff(k));
            }
        }
    }
}
