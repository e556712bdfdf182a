//! Closed-form pieces of the generalized Redheffer inequality.
//!
//! With `y = 4x²` the cosine factors as
//!
//! ```text
//! cos(πx) = (1 − y) · F∞(y),    F∞(y) = lim_n Fₙ(y),    Fₙ(y) = ∏_{k=2}^{n} (1 − y/(2k−1)²)
//! ```
//!
//! so the inequality is a statement about `(1 + y)^{1/α} F∞(y) ≥ 1` on `[0, 1]`.
//! The truncated products [`PartialProduct`] and the induction functional
//! [`InductionFunctional`] drive the threshold sequences in
//! [`crate::thresholds`]; [`margin`] evaluates the inequality itself without
//! any removable singularity.

use core::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::trig::{pow_inv, sin_pi};

/// Sharp exponent `log 2 / log(4/π)`: the largest α for which the
/// inequality holds on all of `[0, 1/2]`.
pub fn alpha_t() -> f64 {
    LN_2 / libm::log(4.0 / PI)
}

/// `log 2 / log(21/16)`, the threshold reached by induction from n = 2.
pub fn alpha_two() -> f64 {
    LN_2 / libm::log(21.0 / 16.0)
}

/// Lower bound `8/π²` on the phase-estimation success probability.
pub fn success_bound() -> f64 {
    8.0 / (PI * PI)
}

/// Named constants, evaluated once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub alpha_t: f64,
    pub success_bound: f64,
}

impl Constants {
    pub fn new() -> Self {
        Constants {
            alpha_t: alpha_t(),
            success_bound: success_bound(),
        }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::new()
    }
}

fn check_unit(name: &'static str, y: f64) -> Result<()> {
    if (0.0..=1.0).contains(&y) {
        Ok(())
    } else {
        Err(Error::domain(name, y, "[0, 1]"))
    }
}

fn odd_square(k: u32) -> f64 {
    let odd = 2 * u64::from(k) - 1;
    (odd * odd) as f64
}

/// The truncated cosine product `Fₙ(y) = ∏_{k=2}^{n} (1 − y/(2k−1)²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartialProduct {
    n: u32,
}

impl PartialProduct {
    /// The product starts at k = 2, so `n ≥ 2`.
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("n", n, "n >= 2"));
        }
        Ok(PartialProduct { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `Fₙ(y)` for `y ∈ [0, 1]`; the result lies in `(0, 1]`.
    pub fn value(&self, y: f64) -> Result<f64> {
        check_unit("y", y)?;
        Ok(self.value_unchecked(y))
    }

    /// `Fₙ'(y) / Fₙ(y) = −Σ_{k=2}^{n} 1/((2k−1)² − y)`.
    pub fn log_derivative(&self, y: f64) -> Result<f64> {
        check_unit("y", y)?;
        Ok(-(2..=self.n).map(|k| 1.0 / (odd_square(k) - y)).sum::<f64>())
    }

    // Factors are multiplied in increasing k for bit-reproducibility.
    pub(crate) fn value_unchecked(&self, y: f64) -> f64 {
        (2..=self.n).fold(1.0, |acc, k| acc * (1.0 - y / odd_square(k)))
    }
}

/// Shorthand for `PartialProduct::new(n)?.value(y)`.
pub fn partial_product(n: u32, y: f64) -> Result<f64> {
    PartialProduct::new(n)?.value(y)
}

/// Shorthand for `PartialProduct::new(n)?.log_derivative(y)`.
pub fn partial_product_log_derivative(n: u32, y: f64) -> Result<f64> {
    PartialProduct::new(n)?.log_derivative(y)
}

/// The infinite product `F∞(y) = cos(π√y/2) / (1 − y)`, equal to `π/4` at `y = 1`.
///
/// Evaluated as `sin(πt/2) / (t(1 + √y))` with `t = 1 − √y`, which is the same
/// quotient with the cancelling factor divided out analytically.
pub fn infinite_product(y: f64) -> Result<f64> {
    check_unit("y", y)?;
    let root = libm::sqrt(y);
    let t = 1.0 - root;
    if t == 0.0 {
        return Ok(PI / 4.0);
    }
    Ok(sin_pi(0.5 * t) / (t * (1.0 + root)))
}

/// The induction functional `G_{n,α}(y) = (1+y)^{1/α} Fₙ(y) − (1 + y/(4n−2))`.
///
/// `G_{n,α} ≥ 0` on `[0, 1]` for one n implies it for every larger n, and
/// hence the inequality for that α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InductionFunctional {
    product: PartialProduct,
    alpha: f64,
}

impl InductionFunctional {
    pub fn new(n: u32, alpha: f64) -> Result<Self> {
        let product = PartialProduct::new(n)?;
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain("alpha", alpha, "alpha > 0"));
        }
        Ok(InductionFunctional { product, alpha })
    }

    pub fn n(&self) -> u32 {
        self.product.n()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn value(&self, y: f64) -> Result<f64> {
        check_unit("y", y)?;
        Ok(self.value_unchecked(y))
    }

    pub(crate) fn value_unchecked(&self, y: f64) -> f64 {
        let linear = 1.0 + y / (4.0 * f64::from(self.product.n()) - 2.0);
        pow_inv(y, self.alpha) * self.product.value_unchecked(y) - linear
    }
}

/// `(1 + 4x²)^{1/α} cos(πx) − (1 − 4x²)` on `x ∈ [0, 1/2]`.
///
/// The inequality holds at `x` iff the margin is nonnegative.
pub fn margin(alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain("alpha", alpha, "alpha > 0"));
    }
    if !(0.0..=0.5).contains(&x) {
        return Err(Error::domain("x", x, "[0, 1/2]"));
    }
    Ok(margin_unchecked(alpha, x))
}

pub(crate) fn margin_unchecked(alpha: f64, x: f64) -> f64 {
    let y = 4.0 * x * x;
    if x < 0.25 {
        // Both sides are 1 + O(x²): with (1+y)^{1/α} = 1 + p and
        // cos(πx) = 1 − 2sin²(πx/2) the margin is p + y − 2sin²(πx/2)(1 + p).
        let p = libm::expm1(libm::log1p(y) / alpha);
        let s = sin_pi(0.5 * x);
        (p + y) - 2.0 * s * s * (1.0 + p)
    } else {
        // Both sides vanish at x = 1/2: cos(πx) = sin(π(1/2 − x)) and
        // 1 − 4x² = (1 − 2x)(1 + 2x).
        pow_inv(y, alpha) * sin_pi(0.5 - x) - (1.0 - 2.0 * x) * (1.0 + 2.0 * x)
    }
}

/// `sin²(πθ)(1/θ² + 1/(1−θ)²)` for `θ ∈ (0, 1)`; at least 8, with equality only at 1/2.
pub fn corollary_lhs(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::domain("theta", theta, "(0, 1)"));
    }
    let rest = 1.0 - theta;
    let s = sin_pi(theta.min(rest));
    Ok(s * s * (1.0 / (theta * theta) + 1.0 / (rest * rest)))
}

fn check_step(m: u32, y: f64) -> Result<()> {
    if m < 2 {
        return Err(Error::domain("m", m, "m >= 2"));
    }
    check_unit("y", y)
}

/// Residual of one induction step,
/// `(1 − y/(2m+1)²)(1 + y/(4m−2)) − (1 + y/(4m+2))`.
pub fn induction_step_residual(m: u32, y: f64) -> Result<f64> {
    check_step(m, y)?;
    let m = f64::from(m);
    let next_odd = 2.0 * m + 1.0;
    Ok((1.0 - y / (next_odd * next_odd)) * (1.0 + y / (4.0 * m - 2.0)) - (1.0 + y / (4.0 * m + 2.0)))
}

/// Quadratic lower bound `3y² / (2(2m−1)(2m+1)²)` on [`induction_step_residual`].
pub fn induction_step_lower_bound(m: u32, y: f64) -> Result<f64> {
    check_step(m, y)?;
    let m = f64::from(m);
    let next_odd = 2.0 * m + 1.0;
    Ok(3.0 * y * y / (2.0 * (2.0 * m - 1.0) * next_odd * next_odd))
}
