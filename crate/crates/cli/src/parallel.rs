//! Grid scans split across scoped threads.
//!
//! Each worker scans a contiguous index block and the partial minima are
//! merged in block order with lowest-index tie-breaking, so the result does
//! not depend on the thread count.

use std::num::NonZeroUsize;
use std::ops::Range;
use std::thread;

use redheffer_core::search::{scan_min, GridMin, UniformGrid};

fn blocks(range: Range<usize>, threads: usize) -> Vec<Range<usize>> {
    let len = range.end.saturating_sub(range.start);
    let chunk = len.div_ceil(threads.max(1)).max(1);
    (range.start..range.end)
        .step_by(chunk)
        .map(|s| s..(s + chunk).min(range.end))
        .collect()
}

/// Minimum of `f` over `range` of `grid`, using up to `threads` workers.
pub fn par_scan_min<F>(f: F, grid: &UniformGrid, range: Range<usize>, threads: NonZeroUsize) -> Option<GridMin>
where
    F: Fn(f64) -> f64 + Sync,
{
    if threads.get() == 1 {
        return scan_min(&f, grid, range);
    }
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = blocks(range, threads.get())
            .into_iter()
            .map(|block| s.spawn(move || scan_min(f, grid, block)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .fold(None, GridMin::merge_opt)
    })
}

/// `items.map(f)` evaluated on up to `threads` workers, results in input order.
pub fn par_map<T, R, F>(items: &[T], threads: NonZeroUsize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if threads.get() == 1 {
        return items.iter().map(f).collect();
    }
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = blocks(0..items.len(), threads.get())
            .into_iter()
            .map(|block| s.spawn(move || items[block].iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nz(n: usize) -> NonZeroUsize {
        NonZeroUsize::new(n).unwrap()
    }

    #[test]
    fn blocks_cover_range_once() {
        for threads in 1..10 {
            let b = blocks(3..20, threads);
            assert_eq!(b.first().unwrap().start, 3);
            assert_eq!(b.last().unwrap().end, 20);
            assert!(b.windows(2).all(|w| w[0].end == w[1].start));
            assert!(b.len() <= threads);
        }
        assert!(blocks(5..5, 4).is_empty());
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let grid = UniformGrid::new(0.0, 1.0, 10_001).unwrap();
        // Plateau of exact ties: lowest index must win regardless of split.
        let f = |x: f64| {
            if (0.3..0.6).contains(&x) {
                -1.0
            } else {
                (x * 40.0).sin()
            }
        };
        let expected = scan_min(f, &grid, grid.indices());
        for threads in 1..=8 {
            assert_eq!(par_scan_min(f, &grid, grid.indices(), nz(threads)), expected);
        }
    }

    #[test]
    fn par_map_preserves_order() {
        let items: Vec<u32> = (0..37).collect();
        for threads in 1..=6 {
            assert_eq!(
                par_map(&items, nz(threads), |v| v * 2),
                items.iter().map(|v| v * 2).collect::<Vec<_>>()
            );
        }
    }
}
