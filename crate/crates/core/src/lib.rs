//! Random Artin groups through their defining graphs.
//!
//! A defining graph on `n` vertices carries a label on every unordered vertex
//! pair: a finite integer `m >= 2` or infinity (no edge). The sample space
//! `G(n, m)` is the set of all such graphs with labels drawn from
//! `{inf, 2, ..., m}`, an alphabet of exactly `m` symbols, under the uniform
//! measure.
//!
//! This crate is `no_std` (with `alloc`) and holds everything that is pure
//! computation:
//!
//! - [`graph`]: labels, graphs, sample spaces and growth functions.
//! - [`classify`]: membership tests for every studied class of Artin groups.
//! - [`exact`]: closed-form counts, probabilities and moment bounds.
//! - [`oracle`]: exhaustive enumeration of tiny sample spaces.
//! - [`montecarlo`]: counter-based sampling and Wilson-interval estimates.
//!
//! File formats, threading and the command line live in the `artin-randlab`
//! companion crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod error;
pub mod exact;
pub mod graph;
pub mod montecarlo;
pub mod oracle;
pub mod predicate;
pub mod rng;

pub use classify::{ClassId, ClassReport, Property};
pub use error::Error;
pub use exact::{ExactProb, MomentReport};
pub use graph::{DefiningGraph, GrowthSpec, Label, SampleSpace};
pub use montecarlo::Estimate;
pub use num_bigint::BigUint;
pub use num_rational::BigRational;
pub use oracle::EnumBudget;
pub use predicate::Predicate;

pub type Result<T, E = Error> = core::result::Result<T, E>;
