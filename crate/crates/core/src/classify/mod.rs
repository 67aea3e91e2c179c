//! Class membership tests for defining graphs.
//!
//! Conventions at `n = 1`: connected, irreducible, cone, FC-type and
//! spherical all hold; 2-dimensionality is defined through vertex triples and
//! is reported false for `n < 3`.

mod cliques;
mod coxeter;
mod report;

pub use cliques::DEFAULT_CLIQUE_BUDGET;
pub use coxeter::{CoxeterMatrix, PIVOT_TOLERANCE};
pub use report::{classify_all, classify_all_with_budget, ClassId, ClassReport, Property};

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use cliques::BitSet;

use crate::graph::{DefiningGraph, Label};
use crate::{Error, Result};

/// Whether the auxiliary graph on the pairs accepted by `keep` is connected.
fn spans_connected(g: &DefiningGraph, keep: impl Fn(Label) -> bool) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for (w, s) in seen.iter_mut().enumerate() {
            if !*s && w != v && keep(g.get(v, w)) {
                *s = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// Connectivity of the finite-label edge graph.
pub fn is_connected(g: &DefiningGraph) -> bool {
    g.n() <= 1 || spans_connected(g, Label::is_finite)
}

/// Whether the vertex set splits into two non-empty parts whose cross pairs
/// are all labeled `k`. Equivalently, the pairs labeled anything but `k`
/// leave the graph disconnected.
pub fn is_k_join(g: &DefiningGraph, k: Label) -> Result<bool> {
    if g.n() < 2 {
        return Err(Error::TooSmall { need: 2, got: g.n() });
    }
    Ok(!spans_connected(g, |l| l != k))
}

/// Not a 2-join. A single vertex counts as irreducible.
pub fn is_irreducible(g: &DefiningGraph) -> bool {
    g.n() < 2 || spans_connected(g, |l| l != Label::Finite(2))
}

/// Some vertex has a finite label to every other vertex.
pub fn is_cone(g: &DefiningGraph) -> bool {
    let n = g.n();
    let mut degree = vec![0usize; n];
    for (i, j, _) in g.edges() {
        degree[i] += 1;
        degree[j] += 1;
    }
    degree.iter().any(|&d| d + 1 == n)
}

/// No vertex meets two edges labeled 2.
pub fn is_22_free(g: &DefiningGraph) -> bool {
    let mut twos = vec![false; g.n()];
    for (i, j, m) in g.edges() {
        if m == 2 {
            if twos[i] || twos[j] {
                return false;
            }
            twos[i] = true;
            twos[j] = true;
        }
    }
    true
}

/// `1/m1 + 1/m2 + 1/m3 > 1` with all three labels finite, in exact integer
/// arithmetic.
pub fn triangle_is_spherical(m1: Label, m2: Label, m3: Label) -> bool {
    match (m1, m2, m3) {
        (Label::Finite(a), Label::Finite(b), Label::Finite(c)) => {
            let (a, b, c) = (a as u128, b as u128, c as u128);
            b * c + a * c + a * b > a * b * c
        }
        _ => false,
    }
}

/// Every vertex triple is non-spherical. False for `n < 3`.
///
/// A spherical triple always carries a 2 (three labels >= 3 sum to at most
/// 1), so only triangles through a 2-edge are inspected.
pub fn is_two_dimensional(g: &DefiningGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    for (a, b, m) in g.edges() {
        if m != 2 {
            continue;
        }
        for c in 0..n {
            if c != a && c != b && triangle_is_spherical(Label::Finite(2), g.get(a, c), g.get(b, c)) {
                return false;
            }
        }
    }
    true
}

fn finite_adjacency(g: &DefiningGraph) -> Vec<BitSet> {
    let mut adj = vec![BitSet::new(g.n()); g.n()];
    for (i, j, _) in g.edges() {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    adj
}

/// Whether the whole graph is a clique whose Coxeter group is finite.
pub fn coxeter_clique_is_finite(labels: &CoxeterMatrix) -> bool {
    labels.is_finite()
}

/// FC-type with the default clique budget.
pub fn is_fc_type(g: &DefiningGraph) -> Result<bool> {
    is_fc_type_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

/// Every clique of finite labels has a finite Coxeter group. Sub-cliques of
/// a finite-type clique are finite type, so maximal cliques suffice.
pub fn is_fc_type_with_budget(g: &DefiningGraph, budget: usize) -> Result<bool> {
    let adj = finite_adjacency(g);
    let mut fc = true;
    cliques::for_each_maximal_clique(&adj, budget, |clique| {
        if clique.len() >= 3 && !CoxeterMatrix::from_clique(g, clique).is_finite() {
            fc = false;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(fc)
}

fn no_finite_label_below(g: &DefiningGraph, bound: u32) -> bool {
    g.edges().all(|(_, _, m)| m >= bound)
}

/// Every finite label is at least 3.
pub fn is_large_type(g: &DefiningGraph) -> bool {
    no_finite_label_below(g, 3)
}

/// Every finite label is at least 4.
pub fn is_extra_large(g: &DefiningGraph) -> bool {
    no_finite_label_below(g, 4)
}

/// Every finite label is at least 5.
pub fn is_xxl(g: &DefiningGraph) -> bool {
    no_finite_label_below(g, 5)
}

pub fn is_free_of_infinity(g: &DefiningGraph) -> bool {
    g.pairs().all(|(_, _, l)| l.is_finite())
}

/// Only labels 2 and infinity occur.
pub fn is_raag(g: &DefiningGraph) -> bool {
    g.edges().all(|(_, _, m)| m == 2)
}

/// The finite-label edge graph has no 3-cycle.
pub fn is_triangle_free(g: &DefiningGraph) -> bool {
    let adj = finite_adjacency(g);
    g.edges().all(|(i, j, _)| !adj[i].intersects(&adj[j]))
}

/// Complete, with a finite Coxeter group.
pub fn is_spherical(g: &DefiningGraph) -> bool {
    is_free_of_infinity(g) && CoxeterMatrix::from_fn(g.n(), |i, j| g.get(i, j)).is_finite()
}
