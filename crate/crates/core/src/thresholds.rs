//! Threshold sequences for the generalized inequality, grid certification,
//! and the sharpness falsifier.
//!
//! For each `n ≥ 2` three exponents bracket what induction from `n` can prove:
//!
//! * `αₙ`, the largest α with `G_{n,α} ≥ 0` on `[0, 1]`, found numerically by
//!   [`alpha_threshold_numeric`];
//! * `βₙ = log 2 / (log(1 + 1/(4n−2)) − log Fₙ(1))`, the closed-form upper
//!   bound on `αₙ` obtained from `G_{n,α}(1) ≥ 0`;
//! * `γₙ = −log 2 / log Fₙ(1)`, the largest α with `(1+y)^{1/α} Fₙ(y) ≥ 1`.
//!
//! `βₙ` increases and `γₙ` decreases to the sharp constant
//! [`alpha_t`](crate::inequality::alpha_t).

use alloc::vec::Vec;
use core::f64::consts::LN_2;

use crate::error::{Error, Result};
use crate::inequality::{margin_unchecked, InductionFunctional, PartialProduct};
use core::ops::Range;

use crate::inequality::corollary_lhs;
use crate::search::{
    bisect_boundary, golden_section_min, refine_grid_min, scan_min, GridMin, Minimum, Objective, UniformGrid,
};

/// A grid minimum at or above `-CERTIFY_TOL` certifies a nonnegativity claim.
pub const CERTIFY_TOL: f64 = 1e-12;

/// Tolerance for flagging `αₙ = βₙ`.
pub const ALPHA_EQ_BETA_TOL: f64 = 1e-5;

/// Second differences above this count as a failure of concavity.
pub const CONCAVITY_TOL: f64 = 1e-10;

const REFINE_TOL: f64 = 1e-15;

/// Closed-form upper bound `βₙ` on the n-threshold.
pub fn beta_threshold(n: u32) -> Result<f64> {
    let f1 = PartialProduct::new(n)?.value_unchecked(1.0);
    let tail = libm::log1p(1.0 / (4.0 * f64::from(n) - 2.0));
    Ok(LN_2 / (tail - libm::log(f1)))
}

/// `γₙ = −log 2 / log Fₙ(1)`.
pub fn gamma_threshold(n: u32) -> Result<f64> {
    let f1 = PartialProduct::new(n)?.value_unchecked(1.0);
    Ok(-LN_2 / libm::log(f1))
}

/// Settings for the numeric n-threshold solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    /// Bisection stops once the bracket is narrower than this.
    pub alpha_tol: f64,
    /// Number of y-grid points for the inner minimization.
    pub y_grid: usize,
    /// `G` counts as negative when its minimum is below `-neg_tol`. `G(0) = 0`
    /// for every α, so a strict `< 0` test would always succeed on round-off.
    pub neg_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            alpha_lo: 0.5,
            alpha_hi: 8.0,
            alpha_tol: 1e-8,
            y_grid: 4097,
            neg_tol: 1e-13,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha_lo > 0.0 && self.alpha_lo < self.alpha_hi && self.alpha_hi.is_finite()) {
            return Err(Error::Bracket {
                lo: self.alpha_lo,
                hi: self.alpha_hi,
            });
        }
        if !(self.alpha_tol > 0.0) {
            return Err(Error::domain("alpha_tol", self.alpha_tol, "alpha_tol > 0"));
        }
        if self.y_grid < 3 {
            return Err(Error::domain("y_grid", self.y_grid as f64, "y_grid >= 3"));
        }
        if !(self.neg_tol > 0.0) {
            return Err(Error::domain("neg_tol", self.neg_tol, "neg_tol > 0"));
        }
        Ok(())
    }
}

/// Minimum of `G_{n,α}` over `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapScan {
    pub n: u32,
    pub alpha: f64,
    pub grid_count: usize,
    pub min_g: f64,
    pub argmin_y: f64,
    pub refined: bool,
}

impl GapScan {
    pub fn certified(&self) -> bool {
        self.min_g >= -CERTIFY_TOL
    }
}

/// Minimize `G_{n,α}` over a uniform grid of `[0, 1]`, then refine around the
/// grid argmin by golden-section search.
pub fn min_induction_gap(n: u32, alpha: f64, grid_count: usize) -> Result<GapScan> {
    min_induction_gap_with(n, alpha, grid_count, |f, g, r| scan_min(f, g, r))
}

/// [`min_induction_gap`] with a caller-supplied grid scan (e.g. a threaded one).
pub fn min_induction_gap_with<S>(n: u32, alpha: f64, grid_count: usize, scan: S) -> Result<GapScan>
where
    S: FnOnce(&Objective<'_>, &UniformGrid, Range<usize>) -> Option<GridMin>,
{
    let g = InductionFunctional::new(n, alpha)?;
    let grid = UniformGrid::new(0.0, 1.0, grid_count)?;
    let f = |y: f64| g.value_unchecked(y);
    let coarse = scan(&f, &grid, grid.indices()).expect("grid is nonempty");
    let (best, refined) = refine_grid_min(f, &grid, coarse, REFINE_TOL);
    Ok(GapScan {
        n,
        alpha,
        grid_count,
        min_g: best.value,
        argmin_y: best.x,
        refined,
    })
}

/// Numeric n-threshold `αₙ`: bisection on α with the predicate
/// "min over y of `G_{n,α}(y)` is below `-neg_tol`".
///
/// The bracket ends must disagree on the predicate. The returned value is
/// the largest probed α at which `G_{n,α}` was found nonnegative.
pub fn alpha_threshold_numeric(n: u32, cfg: &SolverConfig) -> Result<f64> {
    PartialProduct::new(n)?;
    cfg.validate()?;
    let mut scan_error = None;
    let result = bisect_boundary(
        cfg.alpha_lo,
        cfg.alpha_hi,
        cfg.alpha_tol,
        |alpha| match min_induction_gap(n, alpha, cfg.y_grid) {
            Ok(scan) => scan.min_g < -cfg.neg_tol,
            Err(e) => {
                scan_error.get_or_insert(e);
                true
            }
        },
    );
    match scan_error {
        Some(e) => Err(e),
        None => result,
    }
}

/// One row of the threshold table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdRow {
    pub n: u32,
    pub alpha_n: f64,
    pub beta_n: f64,
    pub gamma_n: f64,
    /// `|αₙ − βₙ| < ALPHA_EQ_BETA_TOL`.
    pub alpha_eq_beta: bool,
}

pub fn threshold_row(n: u32, cfg: &SolverConfig) -> Result<ThresholdRow> {
    let alpha_n = alpha_threshold_numeric(n, cfg)?;
    let beta_n = beta_threshold(n)?;
    let gamma_n = gamma_threshold(n)?;
    Ok(ThresholdRow {
        n,
        alpha_n,
        beta_n,
        gamma_n,
        alpha_eq_beta: (alpha_n - beta_n).abs() < ALPHA_EQ_BETA_TOL,
    })
}

/// Rows for `n = 2..=n_max`.
pub fn threshold_table(n_max: u32, cfg: &SolverConfig) -> Result<Vec<ThresholdRow>> {
    if n_max < 2 {
        return Err(Error::domain("n_max", n_max, "n_max >= 2"));
    }
    (2..=n_max).map(|n| threshold_row(n, cfg)).collect()
}

/// Outcome of certifying the inequality for one α on a grid of `[0, 1/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginReport {
    pub alpha: f64,
    pub grid_count: usize,
    pub min_margin: f64,
    pub argmin_x: f64,
    /// Golden-section refinement improved on the best grid sample.
    pub refined: bool,
}

impl MarginReport {
    pub fn certified(&self) -> bool {
        self.min_margin >= -CERTIFY_TOL
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("alpha", alpha, "alpha > 0"))
    }
}

/// Evaluate the margin on a uniform grid of `[0, 1/2]`, refine around the
/// grid argmin, and report the minimum.
pub fn certify_inequality(alpha: f64, grid_count: usize) -> Result<MarginReport> {
    certify_inequality_with(alpha, grid_count, |f, g, r| scan_min(f, g, r))
}

/// [`certify_inequality`] with a caller-supplied grid scan.
pub fn certify_inequality_with<S>(alpha: f64, grid_count: usize, scan: S) -> Result<MarginReport>
where
    S: FnOnce(&Objective<'_>, &UniformGrid, Range<usize>) -> Option<GridMin>,
{
    check_alpha(alpha)?;
    let grid = UniformGrid::new(0.0, 0.5, grid_count)?;
    let f = |x: f64| margin_unchecked(alpha, x);
    let coarse = scan(&f, &grid, grid.indices()).expect("grid is nonempty");
    let (best, refined) = refine_grid_min(f, &grid, coarse, REFINE_TOL);
    Ok(MarginReport {
        alpha,
        grid_count,
        min_margin: best.value,
        argmin_x: best.x,
        refined,
    })
}

/// Minimum of [`corollary_lhs`] over `θ = i/(N+1)`, `i = 1..=N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorollaryReport {
    pub grid_count: usize,
    pub min_lhs: f64,
    pub argmin_theta: f64,
}

impl CorollaryReport {
    /// The corollary bound 8 holds on the grid up to `1e-9`.
    pub fn certified(&self) -> bool {
        self.min_lhs >= 8.0 - 1e-9
    }
}

pub fn corollary_min(grid_count: usize) -> Result<CorollaryReport> {
    corollary_min_with(grid_count, |f, g, r| scan_min(f, g, r))
}

/// [`corollary_min`] with a caller-supplied grid scan. No refinement: the
/// grid contains `θ = 1/2` whenever `N` is odd.
pub fn corollary_min_with<S>(grid_count: usize, scan: S) -> Result<CorollaryReport>
where
    S: FnOnce(&Objective<'_>, &UniformGrid, Range<usize>) -> Option<GridMin>,
{
    if grid_count < 1 {
        return Err(Error::domain("grid_count", grid_count as f64, "grid_count >= 1"));
    }
    // Interior points of a grid with both endpoints of [0, 1] added.
    let grid = UniformGrid::new(0.0, 1.0, grid_count + 2)?;
    let f = |theta: f64| corollary_lhs(theta).unwrap_or(f64::NAN);
    let best = scan(&f, &grid, 1..grid_count + 1).expect("grid is nonempty");
    Ok(CorollaryReport {
        grid_count,
        min_lhs: best.value,
        argmin_theta: grid.point(best.index),
    })
}

/// A point where the inequality fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub x: f64,
    pub margin: f64,
}

const PROBE_DEPTHS: core::ops::RangeInclusive<i32> = 2..=40;

/// Search for `x` with `margin(α, x) < 0`.
///
/// For α just above the sharp constant the violation is a thin layer next
/// to `x = 1/2`, so the probes are `x = 1/2 − 2^{−j}` for `j = 2..=40`,
/// followed by golden-section descent between the neighbours of the best
/// probe. Returns `None` if no negative margin turns up.
pub fn find_violation(alpha: f64) -> Result<Option<Violation>> {
    check_alpha(alpha)?;
    let probe = |j: i32| 0.5 - libm::exp2(-f64::from(j));
    let f = |x: f64| margin_unchecked(alpha, x);

    let mut best: Option<(i32, Minimum)> = None;
    for j in PROBE_DEPTHS {
        let x = probe(j);
        let value = f(x);
        if best.is_none_or(|(_, b)| value < b.value) {
            best = Some((j, Minimum { x, value }));
        }
    }
    let (j, sampled) = best.expect("probe set is nonempty");

    let left = probe((j - 1).max(1));
    let right = if j < *PROBE_DEPTHS.end() { probe(j + 1) } else { 0.5 };
    let descended = golden_section_min(f, left, right, REFINE_TOL);
    let found = if descended.value < sampled.value {
        descended
    } else {
        sampled
    };

    Ok((found.value < 0.0).then_some(Violation {
        x: found.x,
        margin: found.value,
    }))
}

/// Largest central second difference of `G_{2,α}` on a uniform grid of `[0, 1]`.
pub fn max_second_difference(alpha: f64, grid_count: usize) -> Result<f64> {
    let g = InductionFunctional::new(2, alpha)?;
    if grid_count < 3 {
        return Err(Error::domain("grid_count", grid_count as f64, "grid_count >= 3"));
    }
    let grid = UniformGrid::new(0.0, 1.0, grid_count)?;
    let values: Vec<f64> = grid.indices().map(|i| g.value_unchecked(grid.point(i))).collect();
    Ok(values
        .windows(3)
        .map(|w| w[0] - 2.0 * w[1] + w[2])
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Whether `G_{2,α}` is concave on `[0, 1]` at grid resolution, for `7/9 < α < 3`.
pub fn concavity_check(alpha: f64, grid_count: usize) -> Result<bool> {
    if !(alpha > 7.0 / 9.0 && alpha < 3.0) {
        return Err(Error::domain("alpha", alpha, "(7/9, 3)"));
    }
    Ok(max_second_difference(alpha, grid_count)? <= CONCAVITY_TOL)
}
