//! Exact arithmetic toolkit for the Padovan and Perrin sequences.
//!
//! The crate is layered bottom-up:
//!
//! * [`numeric`]: big integers, reduced rationals, polynomials, rational
//!   functions, 3×3 determinants, truncated power series and the numeric
//!   roots of `x³ − x − 1`.
//! * [`sequences`]: `Pₙ` and `Qₙ` for every integer `n`, by memoized
//!   recurrence, by companion-matrix powers and by closed forms.
//! * [`ring`]: exact arithmetic in `Q[x]/(x³ − x − 1)`, where `x` stands for
//!   any of the three roots at once.
//! * [`identities`]: the catalog of summation identities, each with an
//!   independent left-hand and right-hand evaluator.
//! * [`genfunc`]: ordinary generating functions as exact rational functions
//!   and numeric checks of the exponential generating functions.
//! * [`harness`]: parameter grids, the parallel suite runner and JSON reports.

pub mod genfunc;
pub mod harness;
pub mod identities;
pub mod numeric;
pub mod ring;
pub mod sequences;

pub use numeric::{ExactInt, ExactRat};
pub use ring::RingElem;
pub use sequences::SeqEngine;
