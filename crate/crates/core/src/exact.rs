//! Closed-form counts and probabilities on `G(n, m)`.
//!
//! Every quantity is returned as an [`ExactProb`]: an exact rational when the
//! numbers involved stay below [`RATIONAL_BIT_LIMIT`] bits, and always the
//! natural logarithm of the value, so that ranks in the hundreds with label
//! ranges in the tens of thousands evaluate without overflow.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use num_rational::Ratio;

use crate::classify::ClassId;
use crate::graph::{pair_count, GrowthSpec, Label};
use crate::predicate::Predicate;
use crate::{Error, Result};

/// Rational evaluation is skipped once a denominator would exceed this many
/// bits; the log-space value is still produced.
pub const RATIONAL_BIT_LIMIT: f64 = 1_048_576.0;

/// Coefficient of `n!/(n-3)! * m^-3` in the second moment of `X` for two
/// ordered triples on the same three vertices with different centres: the
/// second centre is one of the 2 leaves, and its leaves can be ordered in
/// 2 ways.
pub const CASE9_COEFFICIENT: u32 = 4;

/// Coefficient of `n!/(n-4)! * m^-4` for two triples sharing exactly two
/// vertices where one triple's centre is a leaf of the other and the second
/// shared vertex is a leaf of both (2 directions x 2 x 2 placements). Four
/// distinct edges must carry a 2.
pub const CASE10_COEFFICIENT: u32 = 8;

/// Spherical label triples on a triangle with exactly one 2, counted with
/// their ordering: (2,3,3), (2,3,4), (2,3,5) and permutations.
pub const SPHERICAL_TRIPLES_WITH_ONE_TWO: u32 = 15;

/// A probability kept as an exact rational where feasible and always as a
/// natural logarithm.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactProb {
    rational: Option<BigRational>,
    ln: f64,
}

impl ExactProb {
    pub fn from_rational(r: BigRational) -> Self {
        let ln = ln_rational(&r);
        Self { rational: Some(r), ln }
    }

    pub fn from_ln(ln: f64) -> Self {
        Self { rational: None, ln }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn rational(&self) -> Option<&BigRational> {
        self.rational.as_ref()
    }

    /// Natural logarithm; `-inf` for a zero probability.
    pub fn ln(&self) -> f64 {
        self.ln
    }

    pub fn value(&self) -> f64 {
        match &self.rational {
            Some(r) => r.to_f64().unwrap_or_else(|| libm::exp(self.ln)),
            None => libm::exp(self.ln),
        }
    }

    fn capped_at_one(self) -> Self {
        match self.rational {
            Some(r) if r > BigRational::one() => Self::one(),
            Some(r) => Self { rational: Some(r), ln: self.ln },
            None => Self::from_ln(self.ln.min(0.0)),
        }
    }

    fn complement(&self) -> Option<Self> {
        self.rational.as_ref().map(|r| Self::from_rational(BigRational::one() - r))
    }
}

/// `ln` of a big unsigned integer from its leading 64 bits.
pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return libm::log(x.to_u64().unwrap() as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    libm::log(top as f64) + shift as f64 * core::f64::consts::LN_2
}

fn ln_rational(r: &BigRational) -> f64 {
    let numer = r.numer().magnitude();
    let denom = r.denom().magnitude();
    ln_biguint(numer) - ln_biguint(denom)
}

/// `ln(sum(exp(x)))` with the maximum shifted out.
pub(crate) fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for &t in terms {
        let y = libm::exp(t - max) - compensation;
        let s = sum + y;
        compensation = (s - sum) - y;
        sum = s;
    }
    max + libm::log(sum)
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `(num/den)^e` when the denominator stays below the bit limit.
fn pow_ratio(num: u64, den: u64, e: u64) -> Option<BigRational> {
    if e as f64 * libm::log2(den as f64) > RATIONAL_BIT_LIMIT {
        return None;
    }
    let e = usize::try_from(e).ok()?;
    Some(ratio(num_traits::pow(big(num), e), num_traits::pow(big(den), e)))
}

/// Falling factorial `n (n-1) ... (n-j+1)`; zero when `j > n`.
pub fn falling_factorial(n: u64, j: u64) -> BigUint {
    if j > n {
        return BigUint::zero();
    }
    (n - j + 1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `#G(n, m) = m^(n(n-1)/2)`.
pub fn count_graphs(n: usize, m: u32) -> BigUint {
    num_traits::pow(BigUint::from(m), pair_count(n))
}

/// Probability that none of `k` fixed labels occurs:
/// `((m - k) / m)^(n(n-1)/2)`.
pub fn prob_forbidden_labels(n: usize, m: u32, k: u32) -> Result<ExactProb> {
    if k >= m {
        return Err(Error::BadForbidCount { k, m });
    }
    let pairs = pair_count(n) as u64;
    let ln = pairs as f64 * libm::log1p(-(k as f64) / m as f64);
    Ok(match pow_ratio((m - k) as u64, m as u64, pairs) {
        Some(r) => ExactProb { rational: Some(r), ln },
        None => ExactProb::from_ln(ln),
    })
}

/// Reference asymptote `e^(-k/2)` of [`prob_forbidden_labels`] at `m = n^2`.
pub fn limit_forbidden(k: u32) -> f64 {
    libm::exp(-(k as f64) / 2.0)
}

/// Exact probability that no two 2-labels share a vertex.
///
/// Graphs whose 2-labels form a matching of size `k` number
/// `n! / ((n - 2k)! k! 2^k) * (m - 1)^(C(n,2) - k)`, so the probability is
/// `((m-1)/m)^C(n,2) * (1 + sum_{k>=1} n! (m-1)^-k / ((n-2k)! k! 2^k))`.
pub fn prob_22_free_exact(n: usize, m: u32) -> ExactProb {
    let ln = prob_22_free_ln(n, m);
    match prob_22_free_rational(n, m) {
        Some(r) => ExactProb { rational: Some(r), ln },
        None => ExactProb::from_ln(ln),
    }
}

/// Rational path of [`prob_22_free_exact`]; `None` above the bit limit.
pub fn prob_22_free_rational(n: usize, m: u32) -> Option<BigRational> {
    let pairs = pair_count(n) as u64;
    let prefactor = pow_ratio((m - 1) as u64, m as u64, pairs)?;
    if m == 1 {
        return None;
    }
    // With everything over (m-1)^K, K = floor(n/2): term k contributes
    // matchings(k) * (m-1)^(K-k).
    let kmax = (n / 2) as u64;
    let base = BigUint::from(m - 1);
    let mut numer = BigUint::zero();
    let mut matchings = BigUint::one();
    for k in 0..=kmax {
        if k > 0 {
            // matchings(k) = matchings(k-1) * C(n - 2k + 2, 2) / k
            let free = n as u64 - 2 * k + 2;
            matchings = matchings * (free * (free - 1) / 2) / k;
        }
        numer += &matchings * num_traits::pow(base.clone(), (kmax - k) as usize);
    }
    let series = ratio(numer.into(), num_traits::pow(base, kmax as usize).into());
    Some(prefactor * series)
}

/// Log-space path of [`prob_22_free_exact`]: the series terms come from the
/// ratio `t_k / t_(k-1) = (n-2k+2)(n-2k+1) / (2k (m-1))`, accumulated in
/// ascending `k` and summed with a max shift.
pub fn prob_22_free_ln(n: usize, m: u32) -> f64 {
    let pairs = pair_count(n) as f64;
    let ln_prefactor = pairs * libm::log1p(-1.0 / m as f64);
    let ln_base = libm::log((m - 1) as f64);
    let mut terms = Vec::with_capacity(n / 2 + 1);
    let mut t = 0.0;
    terms.push(t);
    for k in 1..=(n / 2) {
        let free = (n - 2 * k + 2) as f64;
        t += libm::log(free * (free - 1.0)) - libm::log(2.0 * k as f64) - ln_base;
        terms.push(t);
    }
    ln_prefactor + log_sum_exp(&terms)
}

fn m_pow_neg(m: u32, e: usize) -> BigRational {
    ratio(BigInt::one(), num_traits::pow(big(m as u64), e))
}

/// `E[X] = n(n-1)(n-2) / m^2`, where `X` counts ordered triples
/// `(centre, leaf, leaf)` whose two centre edges are labeled 2.
pub fn expectation_x(n: usize, m: u32) -> Result<BigRational> {
    if n < 3 {
        return Err(Error::TooSmall { need: 3, got: n });
    }
    Ok(expectation_x_total(n, m))
}

fn expectation_x_total(n: usize, m: u32) -> BigRational {
    BigRational::from(BigInt::from(falling_factorial(n as u64, 3))) * m_pow_neg(m, 2)
}

/// Exact first and second moments of `X` and the bounds they give.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentReport {
    pub e_x: BigRational,
    /// Contributions to `E[X^2]` by how the two triples overlap:
    ///
    /// 1. disjoint: `(n)_6 m^-4`
    /// 2. one shared vertex, centre of both: `(n)_5 m^-4`
    /// 3. one shared vertex, centre of exactly one: `4 (n)_5 m^-4`
    /// 4. one shared vertex, centre of neither: `4 (n)_5 m^-4`
    /// 5. two shared vertices, centre of neither: `2 (n)_4 m^-4`
    /// 6. two shared, one is the common centre: `4 (n)_4 m^-3`
    /// 7. two shared, each is the other's centre: `4 (n)_4 m^-3`
    /// 8. same vertices, same centre: `2 (n)_3 m^-2`
    /// 9. same vertices, different centres: `4 (n)_3 m^-3`
    /// 10. two shared, one is a centre of one triple only and the other a
    ///     leaf of both: `8 (n)_4 m^-4`
    pub cases: [BigRational; 10],
    pub e_x2: BigRational,
    /// `E[X^2] / E[X]^2`; `None` when `E[X] = 0`.
    pub ratio: Option<BigRational>,
    /// `E[X]^2 / E[X^2]`, a lower bound on `P[X != 0]`.
    pub lower_bound: BigRational,
    /// `E[X]`, an upper bound on `P[X >= 1]` (not capped here).
    pub markov_bound: BigRational,
}

/// Exact `E[X^2]` split by overlap pattern. Falling factorials `(n)_j` with
/// `j > n` are zero, so every `n >= 1` is accepted.
pub fn expectation_x2(n: usize, m: u32) -> MomentReport {
    let n = n as u64;
    let term = |coef: u32, j: u64, power: usize| {
        BigRational::from(BigInt::from(falling_factorial(n, j) * coef)) * m_pow_neg(m, power)
    };
    let cases = [
        term(1, 6, 4),
        term(1, 5, 4),
        term(4, 5, 4),
        term(4, 5, 4),
        term(2, 4, 4),
        term(4, 4, 3),
        term(4, 4, 3),
        term(2, 3, 2),
        term(CASE9_COEFFICIENT, 3, 3),
        term(CASE10_COEFFICIENT, 4, 4),
    ];
    let e_x2: BigRational = cases.iter().cloned().fold(BigRational::zero(), |a, b| a + b);
    let e_x = expectation_x_total(n as usize, m);
    let (ratio, lower_bound) = if e_x.is_zero() {
        (None, BigRational::zero())
    } else {
        let sq = &e_x * &e_x;
        (Some(&e_x2 / &sq), sq / &e_x2)
    };
    MomentReport { markov_bound: e_x.clone(), e_x, cases, e_x2, ratio, lower_bound }
}

/// Second moment bound `P[X != 0] >= E[X]^2 / E[X^2]`; zero when `E[X] = 0`.
pub fn second_moment_lower_bound(n: usize, m: u32) -> ExactProb {
    ExactProb::from_rational(expectation_x2(n, m).lower_bound)
}

/// Markov bound `P[X >= 1] <= min(1, E[X])`.
pub fn markov_upper_bound(n: usize, m: u32) -> ExactProb {
    ExactProb::from_rational(expectation_x_total(n, m)).capped_at_one()
}

/// Union bound over apex vertices: `P[cone] <= min(1, n ((m-1)/m)^(n-1))`.
pub fn cone_upper_bound(n: usize, m: u32) -> ExactProb {
    let e = n.saturating_sub(1) as u64;
    let ln = libm::log(n as f64) + e as f64 * libm::log1p(-1.0 / m as f64);
    match pow_ratio((m - 1) as u64, m as u64, e) {
        Some(r) => ExactProb { rational: Some(r * BigRational::from(big(n as u64))), ln },
        None => ExactProb::from_ln(ln),
    }
    .capped_at_one()
}

/// Union bound over the smaller side of a `k`-join, any fixed `k`:
/// `P[k-join] <= min(1, sum_{j=1}^{floor(n/2)} C(n,j) m^(-j(n-j)))`.
pub fn join_upper_bound(n: usize, m: u32) -> ExactProb {
    let n64 = n as u64;
    let half = n64 / 2;
    if half == 0 {
        return ExactProb::zero();
    }
    let ln_m = libm::log(m as f64);
    let ln_terms: Vec<f64> = (1..=half)
        .map(|j| ln_biguint(&binomial(n64, j)) - (j * (n64 - j)) as f64 * ln_m)
        .collect();
    let ln = log_sum_exp(&ln_terms);
    // Common denominator m^D with D = max_j j(n-j) = half * (n - half).
    let d = half * (n64 - half);
    if d as f64 * libm::log2(m as f64) > RATIONAL_BIT_LIMIT {
        return ExactProb::from_ln(ln).capped_at_one();
    }
    let mb = BigUint::from(m);
    let numer = (1..=half).fold(BigUint::zero(), |acc, j| {
        acc + binomial(n64, j) * num_traits::pow(mb.clone(), (d - j * (n64 - j)) as usize)
    });
    let r = ratio(numer.into(), num_traits::pow(mb, d as usize).into());
    ExactProb { rational: Some(r), ln }.capped_at_one()
}

/// Union bound over triples for a (2,2)-free graph failing 2-dimensionality,
/// in conditional form: `C(n,3) * 15 / (m^3 - 3n)`. `None` unless `m^3 > 3n`.
///
/// The `3n` correction undercounts the label triples that (2,2)-freeness
/// removes from a single triangle (`3m - 2` of them), so
/// `P[D | B] >= 1 - bound` can fail at finite sizes, e.g. at `n = 3, m = 5`.
/// [`two_dim_deficit_bound`] is the unconditional form that always holds.
pub fn two_dim_failure_given_22_free_bound(n: usize, m: u32) -> Option<ExactProb> {
    let m3 = (m as u128).pow(3);
    let denom = m3.checked_sub(3 * n as u128).filter(|&d| d > 0)?;
    let numer = BigUint::from(SPHERICAL_TRIPLES_WITH_ONE_TWO) * binomial(n as u64, 3);
    Some(
        ExactProb::from_rational(ratio(numer.into(), BigInt::from(denom))).capped_at_one(),
    )
}

/// Chance that the pair closing two adjacent 2-edges is infinite, the only
/// way such a graph stays 2-dimensional: `1/m`.
pub fn two_dim_given_not_22_free_bound(m: u32) -> ExactProb {
    ExactProb::from_rational(ratio(BigInt::one(), big(m as u64)))
}

/// `P[(2,2)-free and not 2-dimensional] <= 15 C(n,3) / m^3`: such a graph has
/// a triangle labeled by a permutation of (2,3,3), (2,3,4) or (2,3,5).
pub fn two_dim_deficit_bound(n: usize, m: u32) -> ExactProb {
    triples_over_m3(n, m, SPHERICAL_TRIPLES_WITH_ONE_TWO as u64)
}

/// `P[2-dimensional and not (2,2)-free] <= 3 C(n,3) / m^3`: such a graph has
/// a path of two 2-edges whose closing pair is infinite.
pub fn two_dim_excess_bound(n: usize, m: u32) -> ExactProb {
    triples_over_m3(n, m, 3)
}

fn triples_over_m3(n: usize, m: u32, per_triple: u64) -> ExactProb {
    let numer = binomial(n as u64, 3) * per_triple;
    let denom = BigUint::from(m).pow(3u32);
    ExactProb::from_rational(ratio(numer.into(), denom.into())).capped_at_one()
}

/// `P[FC] <= 1 - ((m-2)/m)^3` for `n >= 3`: a fixed triple with three labels
/// in `{3..m}` is a non-spherical clique.
pub fn fc_type_upper_bound(n: usize, m: u32) -> ExactProb {
    if n < 3 {
        return ExactProb::one();
    }
    let all_large = pow_ratio((m - 2) as u64, m as u64, 3).expect("three factors always fit");
    ExactProb::from_rational(all_large).complement().expect("rational present")
}

/// Closed-form probability of `predicate` on `G(n, m)`, where one exists:
/// the label-forbidding classes and (2,2)-freeness, or their complements.
pub fn closed_form(predicate: Predicate, n: usize, m: u32) -> Option<ExactProb> {
    let forbidden = |labels: &[Label]| labels.iter().filter(|&&l| in_alphabet(l, m)).count() as u32;
    let p = match predicate.class {
        ClassId::LargeType => prob_forbidden_labels(n, m, forbidden(&[Label::Finite(2)])).ok()?,
        ClassId::ExtraLarge => {
            prob_forbidden_labels(n, m, forbidden(&[Label::Finite(2), Label::Finite(3)])).ok()?
        }
        ClassId::XXL => prob_forbidden_labels(
            n,
            m,
            forbidden(&[Label::Finite(2), Label::Finite(3), Label::Finite(4)]),
        )
        .ok()?,
        ClassId::FreeOfInfinity => prob_forbidden_labels(n, m, 1).ok()?,
        ClassId::RAAG => prob_forbidden_labels(n, m, m - 2).ok()?,
        ClassId::TwoTwoFree => prob_22_free_exact(n, m),
        _ => return None,
    };
    Some(if predicate.negated { p.one_minus() } else { p })
}

fn in_alphabet(l: Label, m: u32) -> bool {
    match l {
        Label::Infinite => true,
        Label::Finite(v) => v <= m,
    }
}

impl ExactProb {
    /// `1 - p`, exact when the rational is present.
    pub fn one_minus(&self) -> ExactProb {
        match self.complement() {
            Some(c) => c,
            None => ExactProb::from_ln(libm::log1p(-libm::exp(self.ln))),
        }
    }
}

/// The limiting probability of `predicate` along a power-law growth
/// `M(N) = c N^a`, where the threshold results determine it. `None` at the
/// undetermined critical exponents and for tabulated growth.
pub fn asymptote(predicate: Predicate, growth: &GrowthSpec) -> Option<f64> {
    let a = growth.exponent_ratio()?;
    let c = growth.coefficient()?;
    if a == Ratio::from_integer(0) {
        return None;
    }
    let two = Ratio::from_integer(2u64);
    let three_halves = Ratio::new(3u64, 2);
    let forbid = |k: u32| {
        Some(match a.cmp(&two) {
            Ordering::Greater => 1.0,
            Ordering::Equal => libm::exp(-(k as f64) / (2.0 * c)),
            Ordering::Less => 0.0,
        })
    };
    let value = match predicate.class {
        ClassId::LargeType | ClassId::FreeOfInfinity => forbid(1),
        ClassId::ExtraLarge => forbid(2),
        ClassId::XXL => forbid(3),
        ClassId::TwoTwoFree | ClassId::TwoDimensional => match a.cmp(&three_halves) {
            Ordering::Greater => Some(1.0),
            Ordering::Less => Some(0.0),
            Ordering::Equal => None,
        },
        ClassId::Connected | ClassId::Irreducible => Some(1.0),
        ClassId::KJoin(_) => Some(0.0),
        ClassId::FCType | ClassId::RAAG | ClassId::TriangleFree | ClassId::Spherical => Some(0.0),
        ClassId::Cone => (a < Ratio::from_integer(1)).then_some(0.0),
    }?;
    Some(if predicate.negated { 1.0 - value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn graph_counts() {
        assert_eq!(count_graphs(3, 3), BigUint::from(27u32));
        assert_eq!(count_graphs(1, 5), BigUint::from(1u32));
        assert_eq!(count_graphs(4, 2), BigUint::from(64u32));
    }

    #[test]
    fn forbidden_labels() {
        let p = prob_forbidden_labels(3, 3, 1).unwrap();
        assert_eq!(p.rational(), Some(&q(8, 27)));
        assert!((p.ln() - libm::log(8.0 / 27.0)).abs() < 1e-14);
        assert_eq!(prob_forbidden_labels(7, 5, 0).unwrap().rational(), Some(&q(1, 1)));
        assert_eq!(prob_forbidden_labels(3, 3, 3), Err(Error::BadForbidCount { k: 3, m: 3 }));
    }

    #[test]
    fn forbidden_labels_near_limit() {
        let p = prob_forbidden_labels(200, 40_000, 1).unwrap();
        assert!((p.value() - limit_forbidden(1)).abs() < 0.002);
        let p2 = prob_forbidden_labels(200, 40_000, 2).unwrap();
        assert!((p2.value() - libm::exp(-1.0)).abs() < 0.003);
        assert!(prob_forbidden_labels(200, 200, 1).unwrap().value() < 0.01);
    }

    #[test]
    fn limits() {
        assert!((limit_forbidden(1) - 0.6065306597126334).abs() < 1e-15);
        assert_eq!(limit_forbidden(0), 1.0);
        assert!((limit_forbidden(2) - 0.36787944117144233).abs() < 1e-15);
    }

    #[test]
    fn two_two_free_small() {
        assert_eq!(prob_22_free_exact(3, 3).rational(), Some(&q(20, 27)));
        for m in 2..10 {
            assert_eq!(prob_22_free_exact(2, m).rational(), Some(&q(1, 1)));
            assert_eq!(prob_22_free_exact(1, m).rational(), Some(&q(1, 1)));
        }
        // m = floor(3^1.5) = 5: (4/5)^3 (1 + 3/4) = 112/125.
        assert_eq!(prob_22_free_exact(3, 5).rational(), Some(&q(112, 125)));
    }

    #[test]
    fn two_two_free_paths_agree() {
        for n in 1..=60 {
            for m in [2, 3, 5, 17, 64, 1000] {
                let r = ln_rational(&prob_22_free_rational(n, m).unwrap());
                let l = prob_22_free_ln(n, m);
                assert!((r - l).abs() < 1e-10, "n={n} m={m}: {r} vs {l}");
            }
        }
    }

    #[test]
    fn two_two_free_at_three_halves_power() {
        let v = prob_22_free_exact(190, 2618).value();
        assert!(v > 0.60 && v < 0.70, "{v}");
        let v = prob_22_free_exact(190, 2619).value();
        assert!(v > 0.60 && v < 0.70, "{v}");
    }

    #[test]
    fn first_moment() {
        assert_eq!(expectation_x(4, 2), Ok(q(6, 1)));
        assert_eq!(expectation_x(3, 3), Ok(q(2, 3)));
        assert!(matches!(expectation_x(2, 3), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn second_moment_cases() {
        let r = expectation_x2(6, 7);
        assert_eq!(r.cases[0], q(720, 7i64.pow(4)));
        assert_eq!(r.e_x2, r.cases.iter().cloned().fold(BigRational::zero(), |a, b| a + b));
        assert_eq!(r.lower_bound, r.ratio.clone().unwrap().recip());
        for n in 1..12 {
            for m in 2..8 {
                let r = expectation_x2(n, m);
                assert!(r.lower_bound <= BigRational::one());
                assert!(r.cases.iter().all(|c| *c >= BigRational::zero()));
            }
        }
        assert_eq!(second_moment_lower_bound(2, 5), ExactProb::zero());
    }

    #[test]
    fn overlap_patterns_cover_all_pairs_of_triples() {
        // Ordered-triple pairs: (n)_3^2 = (n)_6 + 9 (n)_5 + 18 (n)_4 + 6 (n)_3.
        for n in 0..15u64 {
            let total = falling_factorial(n, 3).pow(2);
            let split = falling_factorial(n, 6)
                + falling_factorial(n, 5) * 9u32
                + falling_factorial(n, 4) * (2 + 4 + 4 + CASE10_COEFFICIENT)
                + falling_factorial(n, 3) * (2 + CASE9_COEFFICIENT);
            assert_eq!(total, split, "n={n}");
        }
    }

    #[test]
    fn markov_and_cone_and_join() {
        assert_eq!(markov_upper_bound(4, 100).rational(), Some(&q(24, 10_000)));
        assert_eq!(markov_upper_bound(4, 2).rational(), Some(&q(1, 1)));
        assert_eq!(cone_upper_bound(3, 2).rational(), Some(&q(3, 4)));
        assert_eq!(cone_upper_bound(1, 7).rational(), Some(&q(1, 1)));
        assert_eq!(join_upper_bound(4, 2).rational(), Some(&q(7, 8)));
        for m in 2..10 {
            assert_eq!(join_upper_bound(2, m).rational(), Some(&q(2, m as i64).min(q(1, 1))));
        }
        assert_eq!(join_upper_bound(1, 3), ExactProb::zero());
    }

    #[test]
    fn large_bounds_fall_back_to_logs() {
        let c = cone_upper_bound(400, 20);
        assert!(c.value() < 1e-6);
        let j = join_upper_bound(400, 20);
        let expected = libm::log(400.0) - 399.0 * libm::log(20.0);
        assert!((j.ln() - expected).abs() < 1e-9);
        let p = prob_forbidden_labels(2000, 4_000_000, 1).unwrap();
        assert!(p.rational().is_none());
        assert!((p.value() - limit_forbidden(1)).abs() < 1e-3);
    }

    #[test]
    fn lemma_style_bounds() {
        assert!(two_dim_failure_given_22_free_bound(3, 1).is_none());
        let b = two_dim_failure_given_22_free_bound(4, 3).unwrap();
        assert_eq!(b.rational(), Some(&q(1, 1)));
        let b = two_dim_failure_given_22_free_bound(4, 5).unwrap();
        assert_eq!(b.rational(), Some(&q(60, 113)));
        assert_eq!(fc_type_upper_bound(3, 4).rational(), Some(&q(7, 8)));
        assert_eq!(two_dim_deficit_bound(3, 5).rational(), Some(&q(15, 125)));
        assert_eq!(two_dim_deficit_bound(4, 2).rational(), Some(&q(1, 1)));
        assert_eq!(two_dim_excess_bound(3, 2).rational(), Some(&q(3, 8)));
        assert_eq!(two_dim_excess_bound(2, 9), ExactProb::zero());
    }

    #[test]
    fn log_sum_exp_is_stable() {
        let terms = [-1000.0, -1000.0 + libm::log(3.0)];
        assert!((log_sum_exp(&terms) - (-1000.0 + libm::log(4.0))).abs() < 1e-12);
        assert_eq!(log_sum_exp(&[]), f64::NEG_INFINITY);
    }

    #[test]
    fn closed_forms_and_asymptotes() {
        use crate::classify::ClassId as C;
        let p = |c| Predicate::class(c);
        assert_eq!(closed_form(p(C::TwoTwoFree), 3, 3).unwrap().rational(), Some(&q(20, 27)));
        assert_eq!(closed_form(Predicate::not(C::TwoTwoFree), 3, 3).unwrap().rational(), Some(&q(7, 27)));
        assert_eq!(closed_form(p(C::ExtraLarge), 2, 2).unwrap().rational(), Some(&q(1, 2)));
        assert_eq!(closed_form(p(C::RAAG), 3, 4).unwrap().rational(), Some(&q(1, 8)));
        assert!(closed_form(p(C::Cone), 3, 4).is_none());
        let big = closed_form(Predicate::not(C::LargeType), 2000, 4_000_000).unwrap();
        assert!((big.value() - (1.0 - limit_forbidden(1))).abs() < 1e-3);

        let g = |s: &str| s.parse::<GrowthSpec>().unwrap();
        assert_eq!(asymptote(p(C::LargeType), &g("1*N^2")), Some(limit_forbidden(1)));
        assert_eq!(asymptote(p(C::LargeType), &g("N")), Some(0.0));
        assert_eq!(asymptote(p(C::XXL), &g("N^5/2")), Some(1.0));
        assert_eq!(asymptote(p(C::TwoDimensional), &g("N^3/2")), None);
        assert_eq!(asymptote(Predicate::not(C::Cone), &g("N^1/2")), Some(1.0));
        assert_eq!(asymptote(p(C::Cone), &g("N^2")), None);
        assert_eq!(asymptote(p(C::Connected), &g("3*N^0")), None);
    }
}
