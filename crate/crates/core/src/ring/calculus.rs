//! Powers of the root, the Perrin combination, the component product rules,
//! the coefficient set table and symmetric functions of the conjugate pair.

use num_traits::{One, Zero};

use serde::Serialize;

use super::{RingElem, RingError};
use crate::numeric::{rat, ExactRat};

/// `x^n` for any integer `n`; negative powers go through inversion.
pub fn alpha_pow(n: i64) -> RingElem {
    let pos = RingElem::x().pow(n.unsigned_abs());
    if n >= 0 {
        pos
    } else {
        pos.inv().expect("powers of x are units")
    }
}

/// `2x^{n+2} + x^{n−1}`, whose components are `(Qₙ, Qₙ₊₁, Qₙ₋₁)`.
pub fn perrin_combo(n: i64) -> RingElem {
    alpha_pow(n + 2).scale_int(2) + alpha_pow(n - 1)
}

/// The `x^j` component of `f·g` from the three composition rules alone.
pub fn component_product(f: &RingElem, g: &RingElem, j: usize) -> ExactRat {
    let (f0, f1, f2) = (&f.c0, &f.c1, &f.c2);
    let (g0, g1, g2) = (&g.c0, &g.c1, &g.c2);
    match j {
        2 => f0 * g2 + f2 * g0 + f1 * g1 + f2 * g2,
        1 => f0 * g1 + f1 * g0 + f2 * g1 + f1 * g2 + f2 * g2,
        0 => f0 * g0 + f1 * g2 + f2 * g1,
        _ => panic!("component index {j} outside 0..=2"),
    }
}

/// One row `(a, b, c, d, e, f)` with `a·x^{m+c} + b·x^{m+d} = f·x^{m+e}`
/// for every integer `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SetTableEntry {
    pub set_id: u8,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

const fn row(set_id: u8, a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> SetTableEntry {
    SetTableEntry { set_id, a, b, c, d, e, f }
}

pub const SET_TABLE: [SetTableEntry; 15] = [
    row(1, 1, -1, 1, -1, -2, 1),
    row(2, 1, -1, 1, -2, -1, 1),
    row(3, 1, 1, -1, -2, 1, 1),
    row(4, 1, 1, 2, -2, 3, 1),
    row(5, 1, -1, 3, 2, -2, 1),
    row(6, 1, -1, 3, -2, 2, 1),
    row(7, 2, -1, -1, 1, -6, 1),
    row(8, 2, -1, -1, -6, 1, 1),
    row(9, 1, 1, 1, -6, -1, 2),
    row(10, 2, 1, 2, -2, 5, 1),
    row(11, 1, -1, 5, -2, 2, 2),
    row(12, 1, -2, 5, 2, -2, 1),
    row(13, 1, -1, 7, -7, 2, 4),
    row(14, 1, -4, 7, 2, -7, 1),
    row(15, 1, 4, -7, 2, 7, 1),
];

/// Row by 1-based set number.
pub fn set_entry(set_id: i64) -> Option<SetTableEntry> {
    SET_TABLE.iter().copied().find(|r| r.set_id as i64 == set_id)
}

pub fn set_table_check(entry: &SetTableEntry, m: i64) -> bool {
    let lhs = alpha_pow(m + entry.c).scale_int(entry.a) + alpha_pow(m + entry.d).scale_int(entry.b);
    lhs == alpha_pow(m + entry.e).scale_int(entry.f)
}

/// Elementary symmetric functions of the conjugate pair, written in the
/// third root `x`: `e₁ = −x`, `e₂ = 1/x`.
fn pair_elementary() -> (RingElem, RingElem) {
    (-RingElem::x(), RingElem::x().inv().expect("x is a unit"))
}

/// Runs `t_{k+2} = e₁t_{k+1} − e₂t_k` from `(t₀, t₁)` to index `r`, backward
/// for negative `r`.
fn pair_recurrence(t0: RingElem, t1: RingElem, r: i64) -> RingElem {
    let (e1, e2) = pair_elementary();
    if r >= 0 {
        let (mut a, mut b) = (t0, t1);
        for _ in 0..r {
            let next = &e1 * &b - &e2 * &a;
            a = std::mem::replace(&mut b, next);
        }
        a
    } else {
        // t_k = (e₁t_{k+1} − t_{k+2}) / e₂ and 1/e₂ = x
        let inv_e2 = RingElem::x();
        let (mut a, mut b) = (t0, t1); // (t_k, t_{k+1})
        for _ in 0..r.unsigned_abs() {
            let prev = &(&e1 * &a - b) * &inv_e2;
            b = std::mem::replace(&mut a, prev);
        }
        a
    }
}

/// `αʳ + βʳ` as an element in the third root.
pub fn pair_power_sum(r: i64) -> RingElem {
    pair_recurrence(RingElem::scalar(rat(2, 1)), -RingElem::x(), r)
}

/// `(αʳ − βʳ)/(α − β)` as an element in the third root.
pub fn pair_diff_quot(r: i64) -> RingElem {
    pair_recurrence(RingElem::zero(), RingElem::one(), r)
}

/// `((αʳ + βʳ)γᵗ)_{γ²}`.
pub fn gamma_component_pair(r: i64, t: i64) -> ExactRat {
    (&pair_power_sum(r) * &alpha_pow(t)).c2
}

/// `(((αʳ − βʳ)/(αˢ − βˢ))γᵗ)_{γ²}`, for `s ≠ 0`.
pub fn gamma_component_ratio(r: i64, s: i64, t: i64) -> Result<ExactRat, RingError> {
    let den = pair_diff_quot(s);
    if s == 0 || den.is_zero() {
        return Err(RingError::DegenerateDenominator(s));
    }
    let q = pair_diff_quot(r).div(&den).map_err(|_| RingError::DegenerateDenominator(s))?;
    Ok((&q * &alpha_pow(t)).c2)
}

impl SetTableEntry {
    /// The entry with one coefficient perturbed, for negative tests.
    pub fn with_f(mut self, f: i64) -> Self {
        self.f = f;
        self
    }
}
