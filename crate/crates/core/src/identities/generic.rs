//! Polynomial identities in two indeterminates, from which the catalog's
//! sums follow by substituting powers of the roots. Checked at rational points.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::{Domain, IdentityError, Inadmissible, OrderedParams};
use crate::numeric::{binomial, rat, rat_from_int, rat_pow, sign, waring_coeff, ExactRat};

type R = Result<ExactRat, Inadmissible>;
type GenericSide = fn(&ExactRat, &ExactRat, &[i64]) -> R;

pub struct GenericAlgebraIdentity {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: &'static str,
    /// Integer exponents in evaluation order.
    pub exponents: &'static [(&'static str, Domain)],
    lhs: GenericSide,
    rhs: GenericSide,
}

impl std::fmt::Debug for GenericAlgebraIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenericAlgebraIdentity").field("id", &self.id).finish_non_exhaustive()
    }
}

/// Both sides of a generic identity at `(x, y)` and integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericCheck {
    pub id: String,
    pub x: ExactRat,
    pub y: ExactRat,
    pub exponents: Vec<(String, i64)>,
    pub lhs: ExactRat,
    pub rhs: ExactRat,
    pub pass: bool,
}

impl Serialize for GenericCheck {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GenericCheck", 7)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("y", &self.y.to_string())?;
        st.serialize_field("exponents", &OrderedParams(&self.exponents))?;
        st.serialize_field("lhs", &self.lhs.to_string())?;
        st.serialize_field("rhs", &self.rhs.to_string())?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

impl GenericAlgebraIdentity {
    pub fn check(&self, x: &ExactRat, y: &ExactRat, values: &[i64]) -> Result<(ExactRat, ExactRat), Inadmissible> {
        assert_eq!(values.len(), self.exponents.len(), "arity of {}", self.id);
        for (&(name, domain), &v) in self.exponents.iter().zip(values) {
            if !domain.admits(v) {
                return Err(Inadmissible(format!("{name} = {v} violates {name} {}", domain.describe())));
            }
        }
        let rhs = (self.rhs)(x, y, values)?;
        let lhs = (self.lhs)(x, y, values)?;
        Ok((lhs, rhs))
    }
}

/// `b^e`, inadmissible for a zero base with negative exponent.
fn pw(b: &ExactRat, e: i64) -> R {
    if e < 0 && b.is_zero() {
        return Err(Inadmissible(format!("zero raised to {e}")));
    }
    Ok(rat_pow(b, e))
}

fn div(a: ExactRat, b: ExactRat, what: &str) -> R {
    if b.is_zero() {
        return Err(Inadmissible(format!("{what} vanishes")));
    }
    Ok(a / b)
}

fn c(n: i64, k: i64) -> ExactRat {
    rat_from_int(binomial(n, k))
}

fn s(k: i64) -> ExactRat {
    rat(sign(k), 1)
}

fn sum(range: std::ops::RangeInclusive<i64>, mut f: impl FnMut(i64) -> R) -> R {
    let mut acc = ExactRat::zero();
    for j in range {
        acc += f(j)?;
    }
    Ok(acc)
}

const N0: &[(&str, Domain)] = &[("n", Domain::NonNegative)];
const N1: &[(&str, Domain)] = &[("n", Domain::Positive)];
const RN: &[(&str, Domain)] = &[("r", Domain::Integer), ("n", Domain::NonNegative)];

fn build() -> Vec<GenericAlgebraIdentity> {
    vec![
        GenericAlgebraIdentity {
            id: "geometric-sum",
            title: "Finite geometric sum",
            anchor: "sum_{j=0}^n x^j = (x^{n+1} - 1)/(x - 1)",
            exponents: N0,
            lhs: |x, _, v| sum(0..=v[0], |j| pw(x, j)),
            rhs: |x, _, v| div(pw(x, v[0] + 1)? - ExactRat::one(), x - ExactRat::one(), "x - 1"),
        },
        GenericAlgebraIdentity {
            id: "weighted-geometric",
            title: "Geometric sum in x/y",
            anchor: "(x - y) sum_{j=0}^n y^{r-j} x^j = y^{r-n} x^{n+1} - y^{r+1}",
            exponents: RN,
            lhs: |x, y, v| Ok((x - y) * sum(0..=v[1], |j| Ok(pw(y, v[0] - j)? * pw(x, j)?))?),
            rhs: |x, y, v| Ok(pw(y, v[0] - v[1])? * pw(x, v[1] + 1)? - pw(y, v[0] + 1)?),
        },
        GenericAlgebraIdentity {
            id: "shifted-weighted-geometric",
            title: "Geometric sum in (x + y)/y",
            anchor: "x sum_{j=0}^n y^{r-j} (x + y)^j = y^{r-n} (x + y)^{n+1} - y^{r+1}",
            exponents: RN,
            lhs: |x, y, v| {
                let t = x + y;
                Ok(x * sum(0..=v[1], |j| Ok(pw(y, v[0] - j)? * pw(&t, j)?))?)
            },
            rhs: |x, y, v| Ok(pw(y, v[0] - v[1])? * pw(&(x + y), v[1] + 1)? - pw(y, v[0] + 1)?),
        },
        GenericAlgebraIdentity {
            id: "swapped-weighted-geometric",
            title: "Geometric sum in y/x",
            anchor: "(x - y) sum_{j=0}^n x^{r-j} y^j = x^{r+1} - x^{r-n} y^{n+1}",
            exponents: RN,
            lhs: |x, y, v| Ok((x - y) * sum(0..=v[1], |j| Ok(pw(x, v[0] - j)? * pw(y, j)?))?),
            rhs: |x, y, v| Ok(pw(x, v[0] + 1)? - pw(x, v[0] - v[1])? * pw(y, v[1] + 1)?),
        },
        GenericAlgebraIdentity {
            id: "symmetric-product-sum",
            title: "Symmetrized geometric sum",
            anchor: "(1/2) sum_{j=0}^n (xy)^j (x^{n-2j} + y^{n-2j}) = (x^{n+1} - y^{n+1})/(x - y)",
            exponents: N0,
            lhs: |x, y, v| {
                let n = v[0];
                let xy = x * y;
                Ok(sum(0..=n, |j| Ok(pw(&xy, j)? * (pw(x, n - 2 * j)? + pw(y, n - 2 * j)?)))? / rat(2, 1))
            },
            rhs: |x, y, v| div(pw(x, v[0] + 1)? - pw(y, v[0] + 1)?, x - y, "x - y"),
        },
        GenericAlgebraIdentity {
            id: "binomial",
            title: "Binomial formula",
            anchor: "sum_{j=0}^n C(n,j) x^j y^{n-j} = (x + y)^n",
            exponents: N0,
            lhs: |x, y, v| sum(0..=v[0], |j| Ok(c(v[0], j) * pw(x, j)? * pw(y, v[0] - j)?)),
            rhs: |x, y, v| pw(&(x + y), v[0]),
        },
        GenericAlgebraIdentity {
            id: "binomial-alt-1",
            title: "Alternating binomial formula in x + y and y",
            anchor: "sum_{j=0}^n (-1)^j C(n,j) (x + y)^j y^{n-j} = (-1)^n x^n",
            exponents: N0,
            lhs: |x, y, v| {
                let t = x + y;
                sum(0..=v[0], |j| Ok(s(j) * c(v[0], j) * pw(&t, j)? * pw(y, v[0] - j)?))
            },
            rhs: |x, _, v| Ok(s(v[0]) * pw(x, v[0])?),
        },
        GenericAlgebraIdentity {
            id: "binomial-alt-2",
            title: "Alternating binomial formula in x and x + y",
            anchor: "sum_{j=0}^n (-1)^j C(n,j) x^j (x + y)^{n-j} = y^n",
            exponents: N0,
            lhs: |x, y, v| {
                let t = x + y;
                sum(0..=v[0], |j| Ok(s(j) * c(v[0], j) * pw(x, j)? * pw(&t, v[0] - j)?))
            },
            rhs: |_, y, v| pw(y, v[0]),
        },
        GenericAlgebraIdentity {
            id: "binomial-derivative",
            title: "Derivative of the binomial formula",
            anchor: "sum_{j=0}^n C(n,j) j x^{j-1} y^{n-j} = n (x + y)^{n-1}",
            exponents: N1,
            lhs: |x, y, v| sum(1..=v[0], |j| Ok(c(v[0], j) * rat(j, 1) * pw(x, j - 1)? * pw(y, v[0] - j)?)),
            rhs: |x, y, v| Ok(rat(v[0], 1) * pw(&(x + y), v[0] - 1)?),
        },
        GenericAlgebraIdentity {
            id: "binomial-derivative-alt-1",
            title: "Alternating derivative form in x + y and y",
            anchor: "sum_{j=0}^n (-1)^j C(n,j) j (x + y)^{j-1} y^{n-j} = (-1)^n n x^{n-1}",
            exponents: N1,
            lhs: |x, y, v| {
                let t = x + y;
                sum(1..=v[0], |j| Ok(s(j) * c(v[0], j) * rat(j, 1) * pw(&t, j - 1)? * pw(y, v[0] - j)?))
            },
            rhs: |x, _, v| Ok(s(v[0]) * rat(v[0], 1) * pw(x, v[0] - 1)?),
        },
        GenericAlgebraIdentity {
            id: "binomial-derivative-alt-2",
            title: "Alternating derivative form in x and x + y",
            anchor: "sum_{j=1}^n (-1)^{j-1} C(n,j) x^{j-1} j (x + y)^{n-j} = n y^{n-1}",
            exponents: N1,
            lhs: |x, y, v| {
                let t = x + y;
                sum(1..=v[0], |j| Ok(s(j - 1) * c(v[0], j) * pw(x, j - 1)? * rat(j, 1) * pw(&t, v[0] - j)?))
            },
            rhs: |_, y, v| Ok(rat(v[0], 1) * pw(y, v[0] - 1)?),
        },
        GenericAlgebraIdentity {
            id: "waring",
            title: "Power sum in the elementary symmetric functions",
            anchor: "sum_{j=0}^{n/2} (-1)^j n/(n-j) C(n-j,j) (xy)^j (x + y)^{n-2j} = x^n + y^n",
            exponents: N1,
            lhs: |x, y, v| {
                let n = v[0];
                let (xy, t) = (x * y, x + y);
                sum(0..=n / 2, |j| Ok(s(j) * rat_from_int(waring_coeff(n, j)) * pw(&xy, j)? * pw(&t, n - 2 * j)?))
            },
            rhs: |x, y, v| Ok(pw(x, v[0])? + pw(y, v[0])?),
        },
        GenericAlgebraIdentity {
            id: "waring-dual",
            title: "Complete symmetric function in the elementary ones",
            anchor: "sum_{j=0}^{n/2} (-1)^j C(n-j,j) (xy)^j (x + y)^{n-2j} = (x^{n+1} - y^{n+1})/(x - y)",
            exponents: N0,
            lhs: |x, y, v| {
                let n = v[0];
                let (xy, t) = (x * y, x + y);
                sum(0..=n / 2, |j| Ok(s(j) * c(n - j, j) * pw(&xy, j)? * pw(&t, n - 2 * j)?))
            },
            rhs: |x, y, v| div(pw(x, v[0] + 1)? - pw(y, v[0] + 1)?, x - y, "x - y"),
        },
    ]
}

/// Every generic identity, in id order.
pub fn generic_catalog() -> &'static [GenericAlgebraIdentity] {
    static CELL: OnceLock<Vec<GenericAlgebraIdentity>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v = build();
        v.sort_by_key(|g| g.id);
        v
    })
}

pub fn evaluate_generic(
    id: &str,
    x: &ExactRat,
    y: &ExactRat,
    exponents: &[(&str, i64)],
) -> Result<GenericCheck, IdentityError> {
    let g = generic_catalog()
        .iter()
        .find(|g| g.id == id)
        .ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))?;
    let bad = |reason: String| IdentityError::InadmissibleParams {
        id: id.to_string(),
        reason,
    };
    if let Some((name, _)) = exponents.iter().find(|(n, _)| !g.exponents.iter().any(|(e, _)| e == n)) {
        return Err(bad(format!("no exponent named {name}")));
    }
    let values = g
        .exponents
        .iter()
        .map(|&(name, _)| {
            exponents
                .iter()
                .find(|(n, _)| *n == name)
                .map(|&(_, v)| v)
                .ok_or_else(|| bad(format!("missing exponent {name}")))
        })
        .collect::<Result<Vec<i64>, _>>()?;
    let (lhs, rhs) = g.check(x, y, &values).map_err(|e| bad(e.0))?;
    Ok(GenericCheck {
        id: id.to_string(),
        x: x.clone(),
        y: y.clone(),
        exponents: g.exponents.iter().map(|&(n, _)| n.to_string()).zip(values).collect(),
        pass: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let r = evaluate_generic("waring", &rat(2, 1), &rat(3, 1), &[("n", 4)]).unwrap();
        assert_eq!((r.lhs.clone(), r.pass), (rat(97, 1), true));
        for n in 0..6 {
            let r = evaluate_generic("binomial", &rat(1, 1), &rat(0, 1), &[("n", n)]).unwrap();
            assert_eq!((r.lhs.clone(), r.rhs.clone()), (rat(1, 1), rat(1, 1)));
        }
        let err = evaluate_generic("waring-dual", &rat(5, 2), &rat(5, 2), &[("n", 3)]).unwrap_err();
        assert!(matches!(err, IdentityError::InadmissibleParams { ref reason, .. } if reason.contains("x - y")));
    }

    #[test]
    fn zero_base_with_negative_exponent_is_inadmissible() {
        let r = evaluate_generic("weighted-geometric", &rat(1, 1), &rat(0, 1), &[("r", 1), ("n", 3)]);
        assert!(matches!(r, Err(IdentityError::InadmissibleParams { .. })));
        assert!(evaluate_generic("weighted-geometric", &rat(1, 1), &rat(0, 1), &[("r", 4), ("n", 3)]).unwrap().pass);
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(evaluate_generic("waring", &rat(1, 1), &rat(2, 1), &[("n", 0)]).is_err());
        assert!(evaluate_generic("waring", &rat(1, 1), &rat(2, 1), &[]).is_err());
        assert!(evaluate_generic("nope", &rat(1, 1), &rat(2, 1), &[]).is_err());
    }

    #[test]
    fn sorted_and_unique() {
        let ids: Vec<&str> = generic_catalog().iter().map(|g| g.id).collect();
        assert!(ids.windows(2).all(|w| w[0] < w[1]));
    }

    fn arb_rat() -> impl Strategy<Value = ExactRat> {
        (-30i64..30, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn generic_identities_hold(x in arb_rat(), y in arb_rat(), r in -6i64..10, n in 0i64..10) {
            for g in generic_catalog() {
                let vals: Vec<i64> = g.exponents.iter().map(|&(name, _)| if name == "r" { r } else { n }).collect();
                if let Ok((lhs, rhs)) = g.check(&x, &y, &vals) {
                    prop_assert_eq!(lhs, rhs, "{} at x={} y={} {:?}", g.id, x, y, vals);
                }
            }
        }
    }
}
