//! Generating functions of `S_{pj+q}` for `S ∈ {P, Q}`.
//!
//! The ordinary generating function is built exactly as a ratio of two
//! polynomial determinants in `y`. The exponential one is checked in double
//! precision against a determinant over the three roots of `x³ − x − 1`.

use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::numeric::{cubic_roots, det3, rat, rat_from_int, ComplexF, ExactInt, Mat3, Poly, RatFun};
use crate::sequences::{Seq, SeqEngine};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenFuncError {
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

/// `c - y·k` as a polynomial in `y`.
fn affine(c: i64, k: ExactInt) -> Poly {
    Poly::new(vec![rat(c, 1), -rat_from_int(k)])
}

/// `Σ_{j≥0} S_{pj+q} yʲ` as an exact rational function.
///
/// Both determinants share the columns built from `P_{p-1} ..= P_{p-5}`;
/// the numerator replaces the first column with `(S_q, S_{q+1}, S_{q-1})`.
pub fn ogf(p: i64, q: i64, kind: Seq) -> Result<RatFun, GenFuncError> {
    if p == 0 {
        return Err(GenFuncError::DegenerateParameters(
            "p = 0 gives a constant progression".into(),
        ));
    }
    ogf_with(SeqEngine::global(), p, q, kind)
}

fn ogf_with(eng: &SeqEngine, p: i64, q: i64, kind: Seq) -> Result<RatFun, GenFuncError> {
    let pp = |k: i64| eng.p(p + k);
    let s = |k: i64| Poly::constant(rat_from_int(eng.term(kind, q + k)));

    let col2 = [affine(0, pp(-3)), affine(1, pp(-2)), affine(0, pp(-4))];
    let col3 = [affine(0, pp(-4)), affine(0, pp(-3)), affine(1, pp(-5))];
    let numer = det3(&Mat3::new([
        [s(0), col2[0].clone(), col3[0].clone()],
        [s(1), col2[1].clone(), col3[1].clone()],
        [s(-1), col2[2].clone(), col3[2].clone()],
    ]));
    let denom = det3(&Mat3::new([
        [affine(1, pp(-2)), col2[0].clone(), col3[0].clone()],
        [affine(0, pp(-1)), col2[1].clone(), col3[1].clone()],
        [affine(0, pp(-3)), col2[2].clone(), col3[2].clone()],
    ]));
    RatFun::new(numer, denom).map_err(|_| {
        GenFuncError::DegenerateParameters(format!("denominator vanishes identically at p = {p}"))
    })
}

/// One numerical comparison of the exponential generating function.
#[derive(Clone, Debug, PartialEq)]
pub struct EgfCheckpoint {
    pub p: i64,
    pub q: i64,
    pub kind: Seq,
    pub y: f64,
    pub truncation: usize,
    pub series_value: ComplexF,
    pub determinant_value: ComplexF,
    pub residual: f64,
}

struct ComplexJson(ComplexF);

impl Serialize for ComplexJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Complex", 2)?;
        st.serialize_field("re", &self.0.re)?;
        st.serialize_field("im", &self.0.im)?;
        st.end()
    }
}

impl Serialize for EgfCheckpoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EgfCheckpoint", 8)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("y", &self.y)?;
        st.serialize_field("truncation", &self.truncation)?;
        st.serialize_field("series_value", &ComplexJson(self.series_value))?;
        st.serialize_field("determinant_value", &ComplexJson(self.determinant_value))?;
        st.serialize_field("residual", &self.residual)?;
        st.end()
    }
}

/// Largest `|y|` accepted by [`egf_check`].
pub const EGF_MAX_Y: f64 = 2.0;

/// Compares `Σ_{j≤T} S_{pj+q} yʲ/j!` with the closed form
/// `(−i/√23)·det[[w(r)·e^{r^p y}, r, 1]]` over the rows `r = α, β, γ`,
/// where `w(r) = r^{q+4}` for `P` and `2r^{q+2} + r^{q−1}` for `Q`.
pub fn egf_check(
    p: i64,
    q: i64,
    y: f64,
    truncation: usize,
    kind: Seq,
) -> Result<EgfCheckpoint, GenFuncError> {
    if truncation < 1 {
        return Err(GenFuncError::OutOfRange("truncation must be at least 1".into()));
    }
    if y.is_nan() || y.abs() > EGF_MAX_Y {
        return Err(GenFuncError::OutOfRange(format!("|y| = {} exceeds {EGF_MAX_Y}", y.abs())));
    }
    let exp_i32 = |k: i64| {
        i32::try_from(k).map_err(|_| GenFuncError::OutOfRange(format!("exponent {k} too large")))
    };

    let eng = SeqEngine::global();
    let mut series = 0.0f64;
    let mut weight = 1.0f64; // y^j / j!
    for j in 0..=truncation {
        if j > 0 {
            weight *= y / j as f64;
        }
        let term = eng.term(kind, p * j as i64 + q);
        series += term.to_f64().unwrap_or(f64::INFINITY) * weight;
    }

    let roots = cubic_roots().all();
    let (pe, q4, q2, q1) = (exp_i32(p)?, exp_i32(q + 4)?, exp_i32(q + 2)?, exp_i32(q - 1)?);
    let one = ComplexF::new(1.0, 0.0);
    let m = Mat3::from_fn(|i, j| {
        let r = roots[i];
        match j {
            0 => {
                let w = match kind {
                    Seq::P => r.powi(q4),
                    Seq::Q => r.powi(q2) * 2.0 + r.powi(q1),
                };
                w * (r.powi(pe) * y).exp()
            }
            1 => r,
            _ => one,
        }
    });
    let prefactor = ComplexF::new(0.0, -1.0 / 23f64.sqrt());
    let determinant_value = prefactor * det3(&m);
    let series_value = ComplexF::new(series, 0.0);
    Ok(EgfCheckpoint {
        p,
        q,
        kind,
        y,
        truncation,
        series_value,
        determinant_value,
        residual: (series_value - determinant_value).norm(),
    })
}

/// `true` when `f` is a nonzero rational multiple of `g`.
pub fn is_unit_multiple(f: &Poly, g: &Poly) -> bool {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return false;
    };
    if df != dg {
        return false;
    }
    let k = f.coeff(df) / g.coeff(dg);
    !k.is_zero() && *f == g.scale(&k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::series_expand;

    fn coeffs(p: i64, q: i64, kind: Seq, order: usize) -> Vec<i64> {
        let f = ogf(p, q, kind).unwrap();
        series_expand(&f, order)
            .unwrap()
            .coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn ogf_examples() {
        assert_eq!(coeffs(1, 0, Seq::P, 9), [1, 1, 1, 2, 2, 3, 4, 5, 7, 9]);
        assert_eq!(coeffs(1, 0, Seq::Q, 9), [3, 0, 2, 3, 2, 5, 5, 7, 10, 12]);
        assert_eq!(coeffs(2, 1, Seq::P, 5), [1, 2, 3, 5, 9, 16]);
    }

    #[test]
    fn ogf_matches_engine_including_negative_steps() {
        let eng = SeqEngine::global();
        for kind in [Seq::P, Seq::Q] {
            for p in [-3i64, -1, 1, 4, 7] {
                for q in -4..=4 {
                    let s = series_expand(&ogf(p, q, kind).unwrap(), 30).unwrap();
                    for (j, c) in s.coeffs.iter().enumerate() {
                        assert_eq!(*c, rat_from_int(eng.term(kind, p * j as i64 + q)), "{kind:?} p={p} q={q} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn ogf_rejects_zero_step() {
        assert!(matches!(ogf(0, 3, Seq::P), Err(GenFuncError::DegenerateParameters(_))));
    }

    #[test]
    fn unit_step_denominator_is_characteristic() {
        // 1 - y^2 - y^3, expanded by hand from the p = 1 matrix
        let chi = Poly::new(vec![rat(1, 1), rat(0, 1), rat(-1, 1), rat(-1, 1)]);
        for q in -6..=6 {
            let f = ogf(1, q, Seq::P).unwrap();
            assert!(is_unit_multiple(f.denom(), &chi), "q = {q}");
        }
        assert!(!is_unit_multiple(&chi, &Poly::new(vec![rat(1, 1), rat(0, 1), rat(-1, 1)])));
    }

    #[test]
    fn egf_at_origin_is_first_term() {
        let c = egf_check(1, 0, 0.0, 10, Seq::P).unwrap();
        assert!((c.series_value.re - 1.0).abs() < 1e-12);
        assert!(c.residual < 1e-12, "{c:?}");
    }

    #[test]
    fn egf_examples() {
        assert!(egf_check(1, 0, 1.0, 60, Seq::P).unwrap().residual < 1e-9);
        assert!(egf_check(2, 3, 0.5, 60, Seq::Q).unwrap().residual < 1e-9);
        assert!(egf_check(3, -1, -2.0, 80, Seq::Q).unwrap().residual < 1e-9);
    }

    #[test]
    fn egf_rejects_out_of_range() {
        assert!(egf_check(1, 0, 2.5, 10, Seq::P).is_err());
        assert!(egf_check(1, 0, f64::NAN, 10, Seq::P).is_err());
        assert!(egf_check(1, 0, 1.0, 0, Seq::P).is_err());
    }

    #[test]
    fn checkpoint_json_shape() {
        let c = egf_check(1, 0, 0.25, 5, Seq::P).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert!(v["series_value"]["re"].is_f64());
        assert!(v["determinant_value"]["im"].is_f64());
        assert_eq!(v["kind"], "P");
    }
}
