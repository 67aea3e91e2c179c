//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::{Error, Result};

/// Default cap on the number of maximal cliques visited.
pub const DEFAULT_CLIQUE_BUDGET: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for v in 0..len {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &Self) -> u32 {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// Calls `visit` once per maximal clique of the graph given by adjacency
/// bitsets. Stops early when `visit` breaks. Fails once more than `budget`
/// cliques have been produced.
pub(crate) fn for_each_maximal_clique(
    adj: &[BitSet],
    budget: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<()> {
    let n = adj.len();
    if n == 0 {
        return Ok(());
    }
    let mut state = Search { adj, budget, found: 0, clique: Vec::new() };
    match state.expand(BitSet::full(n), BitSet::new(n), &mut visit) {
        Ok(_) => Ok(()),
        Err(e) => Err(e),
    }
}

struct Search<'a> {
    adj: &'a [BitSet],
    budget: usize,
    found: usize,
    clique: Vec<usize>,
}

impl Search<'_> {
    fn expand(
        &mut self,
        mut candidates: BitSet,
        mut excluded: BitSet,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if candidates.is_empty() {
            if excluded.is_empty() {
                self.found += 1;
                if self.found > self.budget {
                    return Err(Error::CliqueBudgetExceeded { budget: self.budget });
                }
                return Ok(visit(&self.clique));
            }
            return Ok(ControlFlow::Continue(()));
        }
        // Pivot: the vertex of P ∪ X with the most neighbours in P.
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&u| self.adj[u].intersection_len(&candidates))
            .expect("candidates is non-empty");
        let branch: Vec<usize> =
            candidates.iter().filter(|&v| !self.adj[pivot].contains(v)).collect();
        for v in branch {
            self.clique.push(v);
            let flow = self.expand(
                candidates.intersection(&self.adj[v]),
                excluded.intersection(&self.adj[v]),
                visit,
            )?;
            self.clique.pop();
            if flow.is_break() {
                return Ok(flow);
            }
            candidates.remove(v);
            excluded.insert(v);
        }
        Ok(ControlFlow::Continue(()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<BitSet> {
        let mut adj = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    fn collect(adj: &[BitSet]) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for_each_maximal_clique(adj, usize::MAX, |c| {
            let mut c = c.to_vec();
            c.sort();
            out.insert(c);
            ControlFlow::Continue(())
        })
        .unwrap();
        out
    }

    // Reference: every vertex subset that is a clique and cannot be extended.
    fn brute_force(n: usize, adj: &[BitSet]) -> BTreeSet<Vec<usize>> {
        let is_clique = |s: u32| {
            (0..n).all(|a| (0..n).all(|b| a == b || s >> a & 1 == 0 || s >> b & 1 == 0 || adj[a].contains(b)))
        };
        let mut out = BTreeSet::new();
        for s in 1u32..(1 << n) {
            if is_clique(s) && (0..n).all(|v| s >> v & 1 == 1 || !is_clique(s | 1 << v)) {
                out.insert((0..n).filter(|v| s >> v & 1 == 1).collect());
            }
        }
        out
    }

    #[test]
    fn matches_brute_force_on_all_graphs_with_five_vertices() {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let adj = adjacency(5, &edges);
            assert_eq!(collect(&adj), brute_force(5, &adj), "mask {mask:b}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        // Cocktail-party graph on 8 vertices: 2^4 maximal cliques.
        let mut edges = Vec::new();
        for a in 0..8 {
            for b in a + 1..8 {
                if b != a + 4 {
                    edges.push((a, b));
                }
            }
        }
        let adj = adjacency(8, &edges);
        assert_eq!(collect(&adj).len(), 16);
        let r = for_each_maximal_clique(&adj, 15, |_| ControlFlow::Continue(()));
        assert_eq!(r, Err(Error::CliqueBudgetExceeded { budget: 15 }));
        assert!(for_each_maximal_clique(&adj, 16, |_| ControlFlow::Continue(())).is_ok());
    }

    #[test]
    fn early_exit() {
        let adj = adjacency(4, &[]);
        let mut seen = 0;
        for_each_maximal_clique(&adj, 1, |_| {
            seen += 1;
            ControlFlow::Break(())
        })
        .unwrap();
        assert_eq!(seen, 1);
    }
}
