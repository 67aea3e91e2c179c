//! Uniform sampling from `G(n, m)` and Wilson-interval estimates.
//!
//! Sample `i` under seed `s` is always the same graph: pair `p` takes the
//! label with alphabet index `SampleStream::new(s, i).below(p, m)`. Success
//! counts over disjoint index ranges therefore add up to the same total
//! however the ranges are spread over workers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::ops::Range;

use crate::graph::{DefiningGraph, SampleSpace};
use crate::predicate::Predicate;
use crate::rng::SampleStream;
use crate::{Error, Result};

/// Draws one graph: every pair independently uniform over `{inf, 2..m}`.
pub fn sample_graph(stream: &SampleStream, space: SampleSpace) -> DefiningGraph {
    let m = space.m() as u64;
    DefiningGraph::from_indices(
        space.n(),
        (0..space.pair_count() as u64).map(|p| stream.below(p, m) as u32),
    )
}

/// The `sample`-th graph under `seed`.
pub fn sample_at(seed: u64, sample: u64, space: SampleSpace) -> DefiningGraph {
    sample_graph(&SampleStream::new(seed, sample), space)
}

/// Number of sample indices in `range` whose graph satisfies `predicate`.
pub fn count_successes(
    predicate: Predicate,
    space: SampleSpace,
    seed: u64,
    range: Range<u64>,
) -> Result<u64> {
    let mut hits = 0;
    for i in range {
        if predicate.holds(&sample_at(seed, i, space))? {
            hits += 1;
        }
    }
    Ok(hits)
}

/// Splits `0..samples` into at most `parts` contiguous ranges.
pub fn partition(samples: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(samples.max(1));
    let base = samples / parts;
    let extra = samples % parts;
    let mut start = 0;
    (0..parts)
        .map(|k| {
            let len = base + u64::from(k < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

/// Inverse of the standard normal CDF (Wichura's AS 241, about 1e-16
/// relative accuracy). `p` must lie in `(0, 1)`.
// Coefficients are kept exactly as published.
#[allow(clippy::excessive_precision)]
pub fn normal_quantile(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q
            * (((((((2509.0809287301226727 * r + 33430.575583588128105) * r
                + 67265.770927008700853)
                * r
                + 45921.953931549871457)
                * r
                + 13731.693765509461125)
                * r
                + 1971.5909503065514427)
                * r
                + 133.14166789178437745)
                * r
                + 3.387132872796366608)
            / (((((((5226.495278852545925 * r + 28729.085735721942674) * r
                + 39307.89580009271061)
                * r
                + 21213.794301586595867)
                * r
                + 5394.1960214247511077)
                * r
                + 687.1870074920579083)
                * r
                + 42.313330701600911252)
                * r
                + 1.0);
    }
    let tail = if q < 0.0 { p } else { 1.0 - p };
    let mut r = libm::sqrt(-libm::log(tail));
    let x = if r <= 5.0 {
        r -= 1.6;
        (((((((7.7454501427834140764e-4 * r + 0.0227238449892691845833) * r
            + 0.24178072517745061177)
            * r
            + 1.27045825245236838258)
            * r
            + 3.64784832476320460504)
            * r
            + 5.7694972214606914055)
            * r
            + 4.6303378461565452959)
            * r
            + 1.42343711074968357734)
            / (((((((1.05075007164441684324e-9 * r + 5.475938084995344946e-4) * r
                + 0.0151986665636164571966)
                * r
                + 0.14810397642748007459)
                * r
                + 0.68976733498510000455)
                * r
                + 1.6763848301838038494)
                * r
                + 2.05319162663775882187)
                * r
                + 1.0)
    } else {
        r -= 5.0;
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r
            + 0.0012426609473880784386)
            * r
            + 0.026532189526576123093)
            * r
            + 0.29656057182850489123)
            * r
            + 1.7848265399172913358)
            * r
            + 5.4637849111641143699)
            * r
            + 6.6579046435011037772)
            / (((((((2.04426310338993978564e-15 * r + 1.4215117583164458887e-7) * r
                + 1.8463183175100546818e-5)
                * r
                + 7.868691311456132591e-4)
                * r
                + 0.0148753612908506148525)
                * r
                + 0.13692988092273580531)
                * r
                + 0.59983220655588793769)
                * r
                + 1.0)
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

/// Wilson score interval for `successes` out of `samples` at normal
/// quantile `z`. Always contains the point estimate.
pub fn wilson_interval(successes: u64, samples: u64, z: f64) -> (f64, f64) {
    let n = samples as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    let low = (centre - half).clamp(0.0, 1.0).min(p);
    let high = (centre + half).clamp(0.0, 1.0).max(p);
    (low, high)
}

/// A Monte Carlo probability estimate with its Wilson interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub predicate: String,
    pub n: usize,
    pub m: u32,
    pub successes: u64,
    pub samples: u64,
    pub seed: u64,
    pub confidence: f64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    pub fn from_successes(
        predicate: Predicate,
        space: SampleSpace,
        successes: u64,
        samples: u64,
        seed: u64,
        confidence: f64,
    ) -> Result<Self> {
        validate(samples, confidence)?;
        let z = normal_quantile(0.5 + confidence / 2.0);
        let (ci_low, ci_high) = wilson_interval(successes, samples, z);
        Ok(Self {
            predicate: predicate.to_string(),
            n: space.n(),
            m: space.m(),
            successes,
            samples,
            seed,
            confidence,
            p_hat: successes as f64 / samples as f64,
            ci_low,
            ci_high,
        })
    }

    pub fn contains(&self, p: f64) -> bool {
        self.ci_low <= p && p <= self.ci_high
    }
}

pub(crate) fn validate(samples: u64, confidence: f64) -> Result<()> {
    if samples == 0 {
        return Err(Error::BadSamples);
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::BadConfidence(confidence));
    }
    Ok(())
}

/// Single-threaded estimate over samples `0..samples`.
pub fn estimate(
    predicate: Predicate,
    space: SampleSpace,
    samples: u64,
    seed: u64,
    confidence: f64,
) -> Result<Estimate> {
    validate(samples, confidence)?;
    let hits = count_successes(predicate, space, seed, 0..samples)?;
    Estimate::from_successes(predicate, space, hits, samples, seed, confidence)
}
