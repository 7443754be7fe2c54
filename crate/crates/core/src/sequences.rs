//! Padovan `Pₙ` and Perrin `Qₙ` numbers for every integer index.
//!
//! Three independent routes are provided so each can check the others:
//! the memoized bidirectional recurrence ([`SeqEngine`]), binary powers of
//! the companion matrix ([`padovan_fast`], [`perrin_fast`]) and the closed
//! forms relating negative and positive indices.

use std::sync::{OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::numeric::{ExactInt, Mat3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Seq {
    P,
    Q,
}

impl Seq {
    fn seeds(self) -> [i64; 3] {
        match self {
            Seq::P => [1, 1, 1],
            Seq::Q => [3, 0, 2],
        }
    }
}

impl std::str::FromStr for Seq {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P" | "p" => Ok(Seq::P),
            "Q" | "q" => Ok(Seq::Q),
            _ => Err(format!("unknown sequence {s:?}; expected P or Q")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("Q_n^2 - Q_2n is odd at n = {0}")]
    ParityViolation(i64),
}

/// Values `a_lo ..= a_hi` of one sequence, stored contiguously.
#[derive(Clone, Debug)]
struct Table {
    lo: i64,
    vals: Vec<ExactInt>,
}

impl Table {
    fn seeded(seeds: [i64; 3]) -> Self {
        Table {
            lo: 0,
            vals: seeds.iter().map(|&v| ExactInt::from(v)).collect(),
        }
    }

    fn hi(&self) -> i64 {
        self.lo + self.vals.len() as i64 - 1
    }

    fn get(&self, n: i64) -> Option<&ExactInt> {
        if n < self.lo {
            return None;
        }
        self.vals.get((n - self.lo) as usize)
    }

    fn cover(&mut self, n: i64) {
        while self.hi() < n {
            let k = self.vals.len();
            let next = &self.vals[k - 2] + &self.vals[k - 3];
            self.vals.push(next);
        }
        if n < self.lo {
            // a_m = a_{m+3} - a_{m+1}, prepended in one batch.
            let missing = (self.lo - n) as usize;
            let mut front: Vec<ExactInt> = Vec::with_capacity(missing + self.vals.len());
            front.resize(missing, ExactInt::zero());
            front.append(&mut self.vals);
            for i in (0..missing).rev() {
                front[i] = &front[i + 3] - &front[i + 1];
            }
            self.vals = front;
            self.lo = n;
        }
    }
}

#[derive(Clone, Debug)]
struct Memo {
    p: Table,
    q: Table,
}

impl Memo {
    fn table(&self, s: Seq) -> &Table {
        match s {
            Seq::P => &self.p,
            Seq::Q => &self.q,
        }
    }

    fn table_mut(&mut self, s: Seq) -> &mut Table {
        match s {
            Seq::P => &mut self.p,
            Seq::Q => &mut self.q,
        }
    }
}

/// Memoized generator of `Pₙ` and `Qₙ` over a growing contiguous window.
///
/// Readers share a lock; the window is only extended under the write lock,
/// so no reader observes a partially written table. Cloning gives an
/// independent engine with a snapshot of the memo.
#[derive(Debug)]
pub struct SeqEngine {
    memo: RwLock<Memo>,
}

impl Default for SeqEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl Clone for SeqEngine {
    fn clone(&self) -> Self {
        SeqEngine {
            memo: RwLock::new(self.memo.read().expect("memo lock").clone()),
        }
    }
}

impl SeqEngine {
    pub fn new() -> Self {
        SeqEngine {
            memo: RwLock::new(Memo {
                p: Table::seeded(Seq::P.seeds()),
                q: Table::seeded(Seq::Q.seeds()),
            }),
        }
    }

    /// Process-wide shared engine.
    pub fn global() -> &'static SeqEngine {
        static ENGINE: OnceLock<SeqEngine> = OnceLock::new();
        ENGINE.get_or_init(SeqEngine::new)
    }

    pub fn term(&self, s: Seq, n: i64) -> ExactInt {
        if let Some(v) = self.memo.read().expect("memo lock").table(s).get(n) {
            return v.clone();
        }
        let mut memo = self.memo.write().expect("memo lock");
        let table = memo.table_mut(s);
        table.cover(n);
        table.get(n).expect("covered").clone()
    }

    pub fn p(&self, n: i64) -> ExactInt {
        self.term(Seq::P, n)
    }

    pub fn q(&self, n: i64) -> ExactInt {
        self.term(Seq::Q, n)
    }

    /// Extend both tables to cover `[lo, hi]`.
    pub fn warm(&self, lo: i64, hi: i64) {
        let mut memo = self.memo.write().expect("memo lock");
        for s in [Seq::P, Seq::Q] {
            let t = memo.table_mut(s);
            t.cover(lo);
            t.cover(hi);
        }
    }

    /// Current memoized window `[lo, hi]` of one sequence.
    pub fn window(&self, s: Seq) -> (i64, i64) {
        let memo = self.memo.read().expect("memo lock");
        let t = memo.table(s);
        (t.lo, t.hi())
    }

    /// Checks the defining recurrence on every memoized triple.
    pub fn memo_is_consistent(&self) -> bool {
        let memo = self.memo.read().expect("memo lock");
        [&memo.p, &memo.q].iter().all(|t| {
            t.vals
                .windows(4)
                .all(|w| w[3] == &w[1] + &w[0])
        })
    }
}

pub fn padovan(n: i64) -> ExactInt {
    SeqEngine::global().p(n)
}

pub fn perrin(n: i64) -> ExactInt {
    SeqEngine::global().q(n)
}

fn step_matrix() -> Mat3<ExactInt> {
    // (a_n, a_{n+1}, a_{n+2}) -> (a_{n+1}, a_{n+2}, a_n + a_{n+1})
    Mat3::from_fn(|i, j| ExactInt::from(matches!((i, j), (0, 1) | (1, 2) | (2, 0) | (2, 1)) as i64))
}

fn back_step_matrix() -> Mat3<ExactInt> {
    // (a_n, a_{n+1}, a_{n+2}) -> (a_{n+2} - a_n, a_n, a_{n+1})
    Mat3::new([
        [ExactInt::from(-1), ExactInt::zero(), ExactInt::one()],
        [ExactInt::one(), ExactInt::zero(), ExactInt::zero()],
        [ExactInt::zero(), ExactInt::one(), ExactInt::zero()],
    ])
}

/// `a_n` by companion-matrix powering, `O(log |n|)` matrix products, no cache.
pub fn seq_fast(s: Seq, n: i64) -> ExactInt {
    let m = if n >= 0 { step_matrix() } else { back_step_matrix() };
    let seeds = s.seeds().map(ExactInt::from);
    let [first, ..] = m.pow(n.unsigned_abs()).apply(&seeds);
    first
}

pub fn padovan_fast(n: i64) -> ExactInt {
    seq_fast(Seq::P, n)
}

pub fn perrin_fast(n: i64) -> ExactInt {
    seq_fast(Seq::Q, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerrinVariant {
    /// `Qₙ = 2Pₙ₋₄ + 3Pₙ₋₅`
    Shift4,
    /// `Qₙ = 2Pₙ₋₂ + Pₙ₋₅`
    Shift2,
}

pub fn perrin_from_padovan(n: i64, variant: PerrinVariant) -> ExactInt {
    let e = SeqEngine::global();
    match variant {
        PerrinVariant::Shift4 => e.p(n - 4) * 2 + e.p(n - 5) * 3,
        PerrinVariant::Shift2 => e.p(n - 2) * 2 + e.p(n - 5),
    }
}

/// `P₋ₙ` as `Pₙ₋₇² − Pₙ₋₆Pₙ₋₈`.
pub fn padovan_negative_closed(n: i64) -> ExactInt {
    let e = SeqEngine::global();
    let a = e.p(n - 7);
    &a * &a - e.p(n - 6) * e.p(n - 8)
}

/// `Q₋ₙ` as `(Qₙ² − Q₂ₙ)/2`.
pub fn perrin_negative_closed(n: i64) -> Result<ExactInt, SeqError> {
    let e = SeqEngine::global();
    let qn = e.q(n);
    let diff = &qn * &qn - e.q(2 * n);
    let (half, rem) = diff.div_rem(&ExactInt::from(2));
    if !rem.is_zero() {
        return Err(SeqError::ParityViolation(n));
    }
    Ok(half)
}

/// Indices `p ∈ [lo, hi]` with `P_p = 0`, with the scanned window recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroSet {
    pub lo: i64,
    pub hi: i64,
    pub indices: Vec<i64>,
}

pub fn padovan_zeros(lo: i64, hi: i64) -> ZeroSet {
    assert!(lo <= hi, "padovan_zeros: empty window [{lo}, {hi}]");
    let e = SeqEngine::global();
    ZeroSet {
        lo,
        hi,
        indices: (lo..=hi).filter(|&n| e.p(n).is_zero()).collect(),
    }
}
