//! Numerics for the generalized Redheffer inequality
//!
//! ```text
//! (1 + 4x²)^{1/α} cos(πx) ≥ 1 − 4x²,    x ∈ [0, 1/2]
//! ```
//!
//! and an exact state-vector simulator for quantum phase estimation, whose
//! 8/π² success bound follows from the α = 2 case.
//!
//! The crate is `no_std` (it needs `alloc` for state vectors and tables).
//! Everything here is a pure function of its arguments; IO, output formats
//! and threading live in the `redheffer-cli` companion crate.
//!
//! Module map:
//!
//! * [`inequality`]: partial cosine products, their log-derivative, the
//!   induction functional, the inequality margin and named constants.
//! * [`thresholds`]: the per-n threshold sequences, grid certification and
//!   the sharpness falsifier.
//! * [`qpe`]: phase states, the (inverse) quantum Fourier transform, and the
//!   outcome distribution computed both by simulation and in closed form.
//! * [`search`]: grid scans, golden-section refinement and bisection shared
//!   by the above.
#![no_std]
// NaN must fail range checks, which `!(a < b)` expresses directly.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod inequality;
pub mod qpe;
pub mod search;
pub mod thresholds;
mod trig;

pub use error::{Error, Result};
