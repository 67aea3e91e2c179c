//! Exhaustive enumeration of tiny sample spaces: the ground truth that every
//! closed form and classifier is checked against.
//!
//! Graphs are visited in mixed-radix order: pairs in lexicographic order,
//! the first pair most significant, labels in alphabet order
//! `inf < 2 < ... < m`. Index `t` in `0..m^C(n,2)` names one graph, so the
//! space splits into ranges that can be visited independently.

use alloc::string::ToString;
use alloc::vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::exact::count_graphs;
use crate::graph::{DefiningGraph, SampleSpace};
use crate::predicate::Predicate;
use crate::{Error, Result};

/// Largest sample space the oracle agrees to walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_graphs: u64,
}

impl EnumBudget {
    pub const DEFAULT: EnumBudget = EnumBudget { max_graphs: 2_000_000 };

    pub fn new(max_graphs: u64) -> Self {
        Self { max_graphs }
    }
}

impl Default for EnumBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `#G(n, m)` if it fits the budget.
pub fn checked_size(space: SampleSpace, budget: EnumBudget) -> Result<u64> {
    let count = count_graphs(space.n(), space.m());
    match count.to_u64() {
        Some(c) if c <= budget.max_graphs => Ok(c),
        _ => Err(Error::TooLarge { count: count.to_string(), budget: budget.max_graphs }),
    }
}

/// Visits the graphs with mixed-radix indices in `range`, reusing one
/// buffer. The caller guarantees `range.end <= m^C(n,2)`.
pub fn for_each_in_range(space: SampleSpace, range: Range<u64>, mut visit: impl FnMut(&DefiningGraph)) {
    if range.is_empty() {
        return;
    }
    let m = space.m();
    let pairs = space.pair_count();
    let mut digits = vec![0u32; pairs];
    let mut rest = range.start;
    for d in digits.iter_mut().rev() {
        *d = (rest % m as u64) as u32;
        rest /= m as u64;
    }
    let mut g = DefiningGraph::from_indices(space.n(), digits.iter().copied());
    for t in range.clone() {
        visit(&g);
        if t + 1 == range.end {
            break;
        }
        for p in (0..pairs).rev() {
            digits[p] += 1;
            if digits[p] == m {
                digits[p] = 0;
                g.set_index(p, 0);
            } else {
                g.set_index(p, digits[p]);
                break;
            }
        }
    }
}

/// Every graph of `G(n, m)` exactly once, in mixed-radix order.
pub struct Enumeration {
    space: SampleSpace,
    next: u64,
    total: u64,
}

impl Iterator for Enumeration {
    type Item = DefiningGraph;

    fn next(&mut self) -> Option<DefiningGraph> {
        if self.next >= self.total {
            return None;
        }
        let mut out = None;
        for_each_in_range(self.space, self.next..self.next + 1, |g| out = Some(g.clone()));
        self.next += 1;
        out
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_graphs(space: SampleSpace, budget: EnumBudget) -> Result<Enumeration> {
    let total = checked_size(space, budget)?;
    Ok(Enumeration { space, next: 0, total })
}

/// Graphs in `range` satisfying `predicate`.
pub fn count_in_range(predicate: Predicate, space: SampleSpace, range: Range<u64>) -> Result<u64> {
    let mut hits = 0;
    let mut failure = None;
    for_each_in_range(space, range, |g| {
        if failure.is_some() {
            return;
        }
        match predicate.holds(g) {
            Ok(true) => hits += 1,
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(hits),
    }
}

/// `#(F ∩ G(n,m)) / #G(n,m)` by exhaustive count.
pub fn exact_probability(
    predicate: Predicate,
    space: SampleSpace,
    budget: EnumBudget,
) -> Result<BigRational> {
    let total = checked_size(space, budget)?;
    let hits = count_in_range(predicate, space, 0..total)?;
    Ok(BigRational::new(BigInt::from(hits), BigInt::from(total)))
}

/// Ordered triples `(centre, leaf, leaf)` with both centre edges labeled 2:
/// `sum_v d(v) (d(v) - 1)` over the 2-degrees `d`.
pub fn x_statistic(g: &DefiningGraph) -> u64 {
    let mut twos = vec![0u64; g.n()];
    for (i, j, m) in g.edges() {
        if m == 2 {
            twos[i] += 1;
            twos[j] += 1;
        }
    }
    twos.iter().map(|&d| d * d.saturating_sub(1)).sum()
}

/// Raw sums of `X` over a range of graphs; ranges combine by addition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MomentSums {
    pub graphs: u64,
    pub sum_x: u128,
    pub sum_x2: u128,
    pub nonzero: u64,
}

impl MomentSums {
    pub fn merge(self, other: Self) -> Self {
        Self {
            graphs: self.graphs + other.graphs,
            sum_x: self.sum_x + other.sum_x,
            sum_x2: self.sum_x2 + other.sum_x2,
            nonzero: self.nonzero + other.nonzero,
        }
    }
}

pub fn moment_sums_in_range(space: SampleSpace, range: Range<u64>) -> MomentSums {
    let mut s = MomentSums::default();
    for_each_in_range(space, range, |g| {
        let x = x_statistic(g) as u128;
        s.graphs += 1;
        s.sum_x += x;
        s.sum_x2 += x * x;
        s.nonzero += u64::from(x != 0);
    });
    s
}

/// Exact `E[X]`, `E[X^2]` and `P[X != 0]` under the uniform measure.
#[derive(Debug, Clone, PartialEq)]
pub struct Moments {
    pub e_x: BigRational,
    pub e_x2: BigRational,
    pub p_nonzero: BigRational,
}

impl From<MomentSums> for Moments {
    fn from(s: MomentSums) -> Self {
        let total = BigInt::from(s.graphs);
        let q = |v: BigInt| BigRational::new(v, total.clone());
        Moments {
            e_x: q(BigInt::from(s.sum_x)),
            e_x2: q(BigInt::from(s.sum_x2)),
            p_nonzero: q(BigInt::from(s.nonzero)),
        }
    }
}

pub fn moments_by_enumeration(space: SampleSpace, budget: EnumBudget) -> Result<Moments> {
    let total = checked_size(space, budget)?;
    Ok(moment_sums_in_range(space, 0..total).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::ClassId;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;

    fn space(n: usize, m: u32) -> SampleSpace {
        SampleSpace::new(n, m).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn enumeration_sizes() {
        let all: Vec<_> = enumerate_graphs(space(3, 2), EnumBudget::DEFAULT).unwrap().collect();
        assert_eq!(all.len(), 8);
        let all: BTreeSet<Vec<_>> = enumerate_graphs(space(3, 3), EnumBudget::DEFAULT)
            .unwrap()
            .map(|g| g.pairs().collect())
            .collect();
        assert_eq!(all.len(), 27);
        match enumerate_graphs(space(6, 4), EnumBudget::DEFAULT) {
            Err(Error::TooLarge { count, .. }) => assert_eq!(count, "1073741824"),
            _ => panic!("expected TooLarge"),
        }
    }

    #[test]
    fn ranges_resume_mid_space() {
        let s = space(3, 3);
        let mut whole = Vec::new();
        for_each_in_range(s, 0..27, |g| whole.push(g.clone()));
        let mut parts = Vec::new();
        for r in [0..5, 5..6, 6..20, 20..27] {
            for_each_in_range(s, r, |g| parts.push(g.clone()));
        }
        assert_eq!(whole, parts);
        assert_eq!(whole[0], DefiningGraph::empty(3));
    }

    #[test]
    fn exact_probabilities() {
        let b = EnumBudget::DEFAULT;
        let p = |c: ClassId, n, m| exact_probability(Predicate::class(c), space(n, m), b).unwrap();
        assert_eq!(p(ClassId::TwoTwoFree, 3, 3), q(20, 27));
        assert_eq!(p(ClassId::FreeOfInfinity, 3, 3), q(8, 27));
        assert_eq!(p(ClassId::Connected, 2, 2), q(1, 2));
    }

    #[test]
    fn moments() {
        let b = EnumBudget::DEFAULT;
        assert_eq!(moments_by_enumeration(space(4, 2), b).unwrap().e_x, q(6, 1));
        assert_eq!(moments_by_enumeration(space(3, 3), b).unwrap().e_x, q(2, 3));
    }

    #[test]
    fn x_is_even() {
        for g in enumerate_graphs(space(4, 3), EnumBudget::DEFAULT).unwrap() {
            assert_eq!(x_statistic(&g) % 2, 0);
        }
    }

    #[test]
    fn budget_refusal() {
        assert!(matches!(
            exact_probability(Predicate::class(ClassId::Cone), space(3, 3), EnumBudget::new(10)),
            Err(Error::TooLarge { .. })
        ));
    }
}
