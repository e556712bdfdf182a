//! One-dimensional search primitives: uniform grid scans with a
//! deterministic argmin, golden-section refinement, and bisection on a
//! monotone predicate.

use core::ops::Range;

use crate::error::{Error, Result};

/// Objective handed to a caller-supplied grid scanner.
pub type Objective<'a> = dyn Fn(f64) -> f64 + Sync + 'a;

/// `count` equally spaced points on `[lo, hi]`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    lo: f64,
    hi: f64,
    count: usize,
}

impl UniformGrid {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::domain("grid_count", count as f64, "count >= 2"));
        }
        if !(lo < hi && lo.is_finite() && hi.is_finite()) {
            return Err(Error::domain("hi", hi, "finite hi > lo"));
        }
        Ok(UniformGrid { lo, hi, count })
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// The i-th point. The last index returns `hi` exactly.
    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.count);
        if i + 1 == self.count {
            self.hi
        } else {
            self.lo + (self.hi - self.lo) * (i as f64 / (self.count - 1) as f64)
        }
    }

    pub fn indices(&self) -> Range<usize> {
        0..self.count
    }
}

/// Smallest sampled value and the grid index where it occurs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMin {
    pub index: usize,
    pub value: f64,
}

impl GridMin {
    /// Combine two partial minima. Ties go to the lower index, so any
    /// partition of the index range reduces to the same result.
    pub fn merge(self, other: GridMin) -> GridMin {
        if other.value < self.value || (other.value == self.value && other.index < self.index) {
            other
        } else {
            self
        }
    }

    pub fn merge_opt(a: Option<GridMin>, b: Option<GridMin>) -> Option<GridMin> {
        match (a, b) {
            (Some(a), Some(b)) => Some(a.merge(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }
}

/// Minimum of `f` over the grid points with indices in `range`.
///
/// NaN samples never win. Returns `None` for an empty range.
pub fn scan_min<F>(f: F, grid: &UniformGrid, range: Range<usize>) -> Option<GridMin>
where
    F: Fn(f64) -> f64,
{
    let end = range.end.min(grid.len());
    let mut best: Option<GridMin> = None;
    for index in range.start..end {
        let value = f(grid.point(index));
        match best {
            Some(b) if !(value < b.value) => {}
            _ if value.is_nan() => {}
            _ => best = Some(GridMin { index, value }),
        }
    }
    best
}

/// Result of minimizing on an interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;
const GOLDEN_MAX_ITERS: usize = 200;

/// Golden-section search for a minimum of a unimodal `f` on `[a, b]`.
///
/// Stops once the bracket is narrower than `tol` (or stops shrinking in
/// floating point). The endpoints are evaluated too, so a monotone `f`
/// reports its boundary minimum.
pub fn golden_section_min<F>(f: F, a: f64, b: f64, tol: f64) -> Minimum
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut best = Minimum { x: a, value: f(a) };
    let fb = f(b);
    if fb < best.value {
        best = Minimum { x: b, value: fb };
    }

    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..GOLDEN_MAX_ITERS {
        if b - a <= tol || !(a < c && c < d && d < b) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    for (x, value) in [(c, fc), (d, fd)] {
        if value < best.value {
            best = Minimum { x, value };
        }
    }
    best
}

/// Refine a grid minimum by golden-section search on the two cells around it.
///
/// Returns the refined point only if it improves on the grid sample, along
/// with whether it did.
pub fn refine_grid_min<F>(f: F, grid: &UniformGrid, coarse: GridMin, tol: f64) -> (Minimum, bool)
where
    F: Fn(f64) -> f64,
{
    let sampled = Minimum {
        x: grid.point(coarse.index),
        value: coarse.value,
    };
    let left = grid.point(coarse.index.saturating_sub(1));
    let right = grid.point((coarse.index + 1).min(grid.len() - 1));
    let refined = golden_section_min(&f, left, right, tol);
    if refined.value < sampled.value {
        (refined, true)
    } else {
        (sampled, false)
    }
}

/// Bisection for the boundary of a monotone predicate.
///
/// `fails(lo)` must be false and `fails(hi)` true; the returned value is the
/// largest probed point that does not fail, within `tol` of the boundary.
pub fn bisect_boundary<P>(lo: f64, hi: f64, tol: f64, mut fails: P) -> Result<f64>
where
    P: FnMut(f64) -> bool,
{
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::Bracket { lo, hi });
    }
    if fails(lo) || !fails(hi) {
        return Err(Error::Bracket { lo, hi });
    }
    let (mut good, mut bad) = (lo, hi);
    while bad - good > tol {
        let mid = 0.5 * (good + bad);
        if mid <= good || mid >= bad {
            break;
        }
        if fails(mid) {
            bad = mid;
        } else {
            good = mid;
        }
    }
    Ok(good)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints_exact() {
        let g = UniformGrid::new(0.0, 0.5, 100_001).unwrap();
        assert_eq!(g.point(0), 0.0);
        assert_eq!(g.point(100_000), 0.5);
        assert_eq!(g.point(50_000), 0.25);
        assert!(UniformGrid::new(0.0, 1.0, 1).is_err());
        assert!(UniformGrid::new(1.0, 1.0, 5).is_err());
    }

    #[test]
    fn scan_min_ties_go_to_lowest_index() {
        let g = UniformGrid::new(-1.0, 1.0, 5).unwrap();
        let m = scan_min(|x| x * x - 1.0 + if x == 0.0 { 0.0 } else { 1.0 }, &g, g.indices()).unwrap();
        assert_eq!(m.index, 2);
        let flat = scan_min(|_| 3.0, &g, g.indices()).unwrap();
        assert_eq!(flat.index, 0);
        assert!(scan_min(|x| x, &g, 3..3).is_none());
    }

    #[test]
    fn partitioned_scan_matches_full_scan() {
        let g = UniformGrid::new(0.0, 1.0, 1001).unwrap();
        let f = |x: f64| libm::cos(7.0 * x) * (x - 0.3);
        let full = scan_min(f, &g, g.indices());
        for parts in [2usize, 3, 7, 1001] {
            let chunk = g.len().div_ceil(parts);
            let merged = (0..parts)
                .map(|p| scan_min(f, &g, p * chunk..((p + 1) * chunk)))
                .fold(None, GridMin::merge_opt);
            assert_eq!(merged, full, "parts = {parts}");
        }
    }

    #[test]
    fn golden_finds_parabola_vertex() {
        let m = golden_section_min(|x| (x - 0.3) * (x - 0.3) + 2.0, 0.0, 1.0, 1e-12);
        assert!((m.x - 0.3).abs() < 1e-7);
        assert!((m.value - 2.0).abs() < 1e-14);
    }

    #[test]
    fn golden_reports_boundary_minimum() {
        let m = golden_section_min(|x| x, 0.25, 0.75, 1e-12);
        assert_eq!(m.x, 0.25);
    }

    #[test]
    fn bisection_locates_boundary() {
        let root = bisect_boundary(0.0, 4.0, 1e-12, |x| x * x > 2.0).unwrap();
        assert!((root - 2f64.sqrt()).abs() < 1e-11);
        assert!(root * root <= 2.0);
    }

    #[test]
    fn bisection_rejects_bad_bracket() {
        assert!(matches!(
            bisect_boundary(0.0, 1.0, 1e-9, |_| true),
            Err(Error::Bracket { .. })
        ));
        assert!(bisect_boundary(0.0, 1.0, 1e-9, |_| false).is_err());
        assert!(bisect_boundary(1.0, 0.0, 1e-9, |x| x > 0.5).is_err());
    }
}
