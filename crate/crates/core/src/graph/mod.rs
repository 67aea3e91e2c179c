//! Labeled defining graphs and the sample space `G(n, m)`.

mod growth;

pub use growth::GrowthSpec;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Internal code for the infinite label.
const INF: u32 = 0;

/// A coefficient `m_ab`: a finite integer `>= 2`, or infinity (no edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadLabel(m as u64));
        }
        Ok(Label::Finite(m))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    /// The label with index `d` in the alphabet order `inf < 2 < 3 < ...`.
    pub fn from_index(d: u32) -> Self {
        if d == 0 {
            Label::Infinite
        } else {
            Label::Finite(d + 1)
        }
    }

    pub fn index(self) -> u32 {
        self.code().saturating_sub(1)
    }

    fn code(self) -> u32 {
        match self {
            Label::Finite(m) => m,
            Label::Infinite => INF,
        }
    }

    fn from_code(c: u32) -> Self {
        if c == INF {
            Label::Infinite
        } else {
            Label::Finite(c)
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{i, j}`, `i < j`, in lexicographic pair order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// A defining graph: `n` vertices and a label on each of the `n(n-1)/2`
/// unordered pairs. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DefiningGraph {
    n: usize,
    // Lexicographic pair order; 0 encodes infinity.
    codes: Vec<u32>,
}

impl DefiningGraph {
    /// Builds a graph from explicit assignments; unlisted pairs are infinite.
    pub fn new(n: usize, assignments: &[(usize, usize, Label)]) -> Result<Self> {
        let mut codes = vec![INF; pair_count(n)];
        let mut seen = vec![false; codes.len()];
        for &(i, j, label) in assignments {
            if i >= j || j >= n {
                return Err(Error::BadVertex { i, j, n });
            }
            if let Label::Finite(m) = label {
                if m < 2 {
                    return Err(Error::BadLabel(m as u64));
                }
            }
            let p = pair_index(n, i, j);
            if seen[p] {
                return Err(Error::DuplicateEdge { i, j });
            }
            seen[p] = true;
            codes[p] = label.code();
        }
        Ok(Self { n, codes })
    }

    /// The graph with every pair infinite.
    pub fn empty(n: usize) -> Self {
        Self { n, codes: vec![INF; pair_count(n)] }
    }

    /// Builds a graph from labels listed in lexicographic pair order.
    pub fn from_pair_labels(n: usize, labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        let mut codes = Vec::with_capacity(pair_count(n));
        for label in labels {
            if let Label::Finite(m) = label {
                if m < 2 {
                    return Err(Error::BadLabel(m as u64));
                }
            }
            codes.push(label.code());
        }
        assert_eq!(codes.len(), pair_count(n), "expected one label per pair");
        Ok(Self { n, codes })
    }

    /// Builds a graph from alphabet indices in lexicographic pair order
    /// (`0 -> inf`, `d -> d + 1`).
    pub(crate) fn from_indices(n: usize, indices: impl Iterator<Item = u32>) -> Self {
        let codes: Vec<u32> = indices.map(|d| Label::from_index(d).code()).collect();
        debug_assert_eq!(codes.len(), pair_count(n));
        Self { n, codes }
    }

    pub(crate) fn set_index(&mut self, pair: usize, d: u32) {
        self.codes[pair] = Label::from_index(d).code();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.codes.len()
    }

    /// Label of the pair `{i, j}`; symmetric in its arguments.
    pub fn label(&self, i: usize, j: usize) -> Result<Label> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::BadVertex { i, j, n: self.n });
        }
        Ok(self.get(i, j))
    }

    /// Unchecked variant of [`label`](Self::label) for internal scans.
    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> Label {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        Label::from_code(self.codes[pair_index(self.n, a, b)])
    }

    /// All pairs with their labels, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.codes.iter())
            .map(|((i, j), &c)| (i, j, Label::from_code(c)))
    }

    /// Pairs carrying a finite label, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.pairs().filter_map(|(i, j, l)| match l {
            Label::Finite(m) => Some((i, j, m)),
            Label::Infinite => None,
        })
    }

    /// Adjacency lists of the finite-label edge graph.
    pub fn finite_neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, j, _) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Largest finite label present, if any.
    pub fn max_finite_label(&self) -> Option<u32> {
        self.codes.iter().copied().filter(|&c| c != INF).max()
    }
}

impl fmt::Debug for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DefiningGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// The family `G(n, m)`: every graph on `n` vertices with labels in
/// `{inf, 2, ..., m}`. The alphabet has exactly `m` symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SampleSpace {
    n: usize,
    m: u32,
}

impl SampleSpace {
    pub fn new(n: usize, m: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::TooSmall { need: 1, got: n });
        }
        if m < 2 {
            return Err(Error::BadLabel(m as u64));
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn pair_count(&self) -> usize {
        pair_count(self.n)
    }

    /// The alphabet in index order: `inf, 2, 3, ..., m`.
    pub fn alphabet(&self) -> impl Iterator<Item = Label> {
        (0..self.m).map(Label::from_index)
    }

    pub fn contains_label(&self, label: Label) -> bool {
        match label {
            Label::Infinite => true,
            Label::Finite(v) => (2..=self.m).contains(&v),
        }
    }

    pub fn contains(&self, g: &DefiningGraph) -> bool {
        g.n() == self.n && g.pairs().all(|(_, _, l)| self.contains_label(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(a: u32, b: u32, c: u32) -> DefiningGraph {
        DefiningGraph::new(
            3,
            &[(0, 1, Label::Finite(a)), (1, 2, Label::Finite(b)), (0, 2, Label::Finite(c))],
        )
        .unwrap()
    }

    #[test]
    fn empty_assignment_is_all_infinite() {
        let g = DefiningGraph::new(3, &[]).unwrap();
        assert_eq!(g.pair_count(), 3);
        assert!(g.pairs().all(|(_, _, l)| l == Label::Infinite));
        assert_eq!(g.label(0, 1), Ok(Label::Infinite));
    }

    #[test]
    fn explicit_triangle() {
        let g = triangle(2, 2, 3);
        assert_eq!(g.label(0, 2), Ok(Label::Finite(3)));
        assert_eq!(g.label(2, 0), Ok(Label::Finite(3)));
        assert_eq!(g.label(1, 2), Ok(Label::Finite(2)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            DefiningGraph::new(2, &[(0, 1, Label::Finite(1))]),
            Err(Error::BadLabel(1))
        );
        assert!(matches!(
            DefiningGraph::new(2, &[(0, 2, Label::Finite(3))]),
            Err(Error::BadVertex { .. })
        ));
        assert!(matches!(
            DefiningGraph::new(3, &[(1, 0, Label::Finite(3))]),
            Err(Error::BadVertex { .. })
        ));
        assert_eq!(
            DefiningGraph::new(3, &[(0, 1, Label::Finite(3)), (0, 1, Label::Infinite)]),
            Err(Error::DuplicateEdge { i: 0, j: 1 })
        );
        let g = DefiningGraph::empty(3);
        assert!(matches!(g.label(0, 0), Err(Error::BadVertex { .. })));
        assert!(matches!(g.label(0, 3), Err(Error::BadVertex { .. })));
    }

    #[test]
    fn pair_index_is_lexicographic() {
        for n in 1..9 {
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    assert_eq!(pair_index(n, i, j), k);
                    k += 1;
                }
            }
            assert_eq!(k, pair_count(n));
        }
    }

    #[test]
    fn alphabet_has_m_symbols() {
        for m in 2..20 {
            let s = SampleSpace::new(4, m).unwrap();
            let a: Vec<_> = s.alphabet().collect();
            assert_eq!(a.len(), m as usize);
            assert_eq!(a[0], Label::Infinite);
            assert_eq!(*a.last().unwrap(), Label::Finite(m));
        }
        assert!(SampleSpace::new(3, 1).is_err());
        assert!(SampleSpace::new(0, 3).is_err());
    }

    #[test]
    fn label_index_round_trip() {
        for d in 0..50 {
            assert_eq!(Label::from_index(d).index(), d);
        }
    }
}
