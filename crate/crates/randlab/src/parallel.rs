//! Threaded versions of the core reductions.
//!
//! Work is split into contiguous index ranges with
//! [`montecarlo::partition`]; each range runs on a scoped thread and the
//! per-range results are combined in range order. Since every sample index
//! maps to a fixed graph, totals do not depend on the thread count.

use std::num::NonZeroUsize;
use std::ops::Range;
use std::thread;

use artin_randlab_core::montecarlo::{self, partition};
use artin_randlab_core::oracle::{self, checked_size, MomentSums, Moments};
use artin_randlab_core::{BigRational, EnumBudget, Estimate, Predicate, Result, SampleSpace};

pub const THREADS_ENV: &str = "ARTIN_RANDLAB_THREADS";

pub fn available_threads() -> usize {
    thread::available_parallelism().map(NonZeroUsize::get).unwrap_or(1)
}

/// Runs `f` over the ranges on up to `threads` workers; results come back in
/// range order.
pub fn map_ranges<T, F>(ranges: Vec<Range<u64>>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    if ranges.len() <= 1 {
        return ranges.into_iter().map(&f).collect();
    }
    let f = &f;
    thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(move || f(r))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

pub fn estimate(
    predicate: Predicate,
    space: SampleSpace,
    samples: u64,
    seed: u64,
    confidence: f64,
    threads: usize,
) -> Result<Estimate> {
    // Validates before spawning anything.
    Estimate::from_successes(predicate, space, 0, samples, seed, confidence)?;
    let counts = map_ranges(partition(samples, threads), |r| {
        montecarlo::count_successes(predicate, space, seed, r)
    });
    let hits = counts.into_iter().sum::<Result<u64>>()?;
    Estimate::from_successes(predicate, space, hits, samples, seed, confidence)
}

pub fn exact_probability(
    predicate: Predicate,
    space: SampleSpace,
    budget: EnumBudget,
    threads: usize,
) -> Result<BigRational> {
    let total = checked_size(space, budget)?;
    let counts = map_ranges(partition(total, threads), |r| {
        oracle::count_in_range(predicate, space, r)
    });
    let hits = counts.into_iter().sum::<Result<u64>>()?;
    Ok(BigRational::new(hits.into(), total.into()))
}

pub fn moments(space: SampleSpace, budget: EnumBudget, threads: usize) -> Result<Moments> {
    let total = checked_size(space, budget)?;
    let sums = map_ranges(partition(total, threads), |r| oracle::moment_sums_in_range(space, r));
    Ok(sums.into_iter().fold(MomentSums::default(), MomentSums::merge).into())
}
