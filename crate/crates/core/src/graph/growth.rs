use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

/// A concrete growth function `N -> M(N)` tying the label range to the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthSpec {
    /// `M(N) = max(2, floor(coef * N^exponent))`.
    Power { coef: Ratio<u64>, exponent: Ratio<u64> },
    /// Step function through `(n, m)` points sorted by `n`; each point holds
    /// until the next one. Values below the first point use the first `m`.
    Table(Vec<(usize, u64)>),
}

impl GrowthSpec {
    pub fn power(coef: Ratio<u64>, exponent: Ratio<u64>) -> Result<Self> {
        if coef.numer().is_zero() {
            return Err(Error::BadGrowth("coefficient must be positive".to_string()));
        }
        Ok(GrowthSpec::Power { coef, exponent })
    }

    /// Tabulated growth. Points must be ascending in `n` with non-decreasing `m`.
    pub fn table(points: Vec<(usize, u64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::BadGrowth("empty table".to_string()));
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 || w[1].1 < w[0].1 {
                return Err(Error::BadGrowth(
                    "table must be strictly ascending in n and non-decreasing in m".to_string(),
                ));
            }
        }
        Ok(GrowthSpec::Table(points))
    }

    /// Evaluates `M(n)`. Power laws are floored exactly in integer arithmetic.
    pub fn eval(&self, n: usize) -> u64 {
        match self {
            GrowthSpec::Power { coef, exponent } => {
                // floor((a/b) * n^(p/q)) = floor(floor((a^q n^p)^(1/q)) / b)
                let (a, b) = (*coef.numer(), *coef.denom());
                let (p, q) = (*exponent.numer(), *exponent.denom());
                let q32 = u32::try_from(q).expect("exponent denominator too large");
                let p32 = u32::try_from(p).expect("exponent numerator too large");
                let target = num_traits::pow::pow(BigUint::from(a), q32 as usize)
                    * num_traits::pow::pow(BigUint::from(n), p32 as usize);
                let root = target.nth_root(q32);
                let floor = root / BigUint::from(b);
                floor.to_u64().unwrap_or(u64::MAX).max(2)
            }
            GrowthSpec::Table(points) => {
                let idx = points.partition_point(|&(k, _)| k <= n);
                let m = if idx == 0 { points[0].1 } else { points[idx - 1].1 };
                m.max(2)
            }
        }
    }

    /// Exponent of a power law as a float; `None` for tables.
    pub fn exponent(&self) -> Option<f64> {
        match self {
            GrowthSpec::Power { exponent, .. } => {
                Some(*exponent.numer() as f64 / *exponent.denom() as f64)
            }
            GrowthSpec::Table(_) => None,
        }
    }

    pub fn coefficient(&self) -> Option<f64> {
        match self {
            GrowthSpec::Power { coef, .. } => Some(*coef.numer() as f64 / *coef.denom() as f64),
            GrowthSpec::Table(_) => None,
        }
    }

    pub fn exponent_ratio(&self) -> Option<Ratio<u64>> {
        match self {
            GrowthSpec::Power { exponent, .. } => Some(*exponent),
            GrowthSpec::Table(_) => None,
        }
    }

    pub fn coefficient_ratio(&self) -> Option<Ratio<u64>> {
        match self {
            GrowthSpec::Power { coef, .. } => Some(*coef),
            GrowthSpec::Table(_) => None,
        }
    }
}

fn parse_decimal(s: &str) -> Option<Ratio<u64>> {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let numer: u64 = digits.parse().ok()?;
    let denom = 10u64.checked_pow(frac.len() as u32)?;
    Some(Ratio::new(numer, denom))
}

fn parse_exponent(s: &str) -> Option<Ratio<u64>> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: u64 = p.parse().ok()?;
            let q: u64 = q.parse().ok()?;
            (q != 0).then(|| Ratio::new(p, q))
        }
        None => parse_decimal(s),
    }
}

/// Parses `c*N^p/q`. The coefficient and the exponent are optional
/// (`N`, `N^2`, `3*N`, `0.5*N^3/2` are all accepted); whitespace is ignored.
impl FromStr for GrowthSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGrowth(s.to_string());
        let compact: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (coef, rest) = match compact.split_once('*') {
            Some((c, r)) => (parse_decimal(c).ok_or_else(bad)?, r),
            None => (Ratio::from_integer(1), compact.as_str()),
        };
        let rest = rest.strip_prefix(['N', 'n']).ok_or_else(bad)?;
        let exponent = if rest.is_empty() {
            Ratio::from_integer(1)
        } else {
            parse_exponent(rest.strip_prefix('^').ok_or_else(bad)?).ok_or_else(bad)?
        };
        GrowthSpec::power(coef, exponent).map_err(|_| bad())
    }
}

impl fmt::Display for GrowthSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthSpec::Power { coef, exponent } => {
                write!(f, "{}*N^{}", coef, exponent)
            }
            GrowthSpec::Table(points) => {
                f.write_str("table[")?;
                for (k, (n, m)) in points.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{n}:{m}")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn spec(s: &str) -> GrowthSpec {
        s.parse().unwrap()
    }

    // floor(n^(3/2)) by integer square root of n^3.
    fn floor_pow_three_halves(n: u64) -> u64 {
        let cube = n * n * n;
        let mut r = (cube as f64).sqrt() as u64;
        while r * r > cube {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= cube {
            r += 1;
        }
        r
    }

    #[test]
    fn three_halves_matches_integer_sqrt() {
        assert_eq!(floor_pow_three_halves(190), 2618);
        let g = spec("1*N^3/2");
        assert_eq!(g.eval(190), 2618);
        for n in 1..400 {
            assert_eq!(g.eval(n as usize), floor_pow_three_halves(n).max(2));
        }
        assert_eq!(g.eval(5), 11);
        assert_eq!(g.eval(3), 5);
    }

    #[test]
    fn simple_powers() {
        assert_eq!(spec("1*N^2").eval(10), 100);
        assert_eq!(spec("1*N^1/2").eval(4), 2);
        assert_eq!(spec("N^1/2").eval(3), 2);
        assert_eq!(spec("N").eval(17), 17);
        assert_eq!(spec(" 2.5 * N ^ 2 ").eval(3), 22);
        assert_eq!(spec("0.5*N^5/2").eval(4), 16);
        assert_eq!(spec("3*N^0").eval(100), 3);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "N^", "x*N", "1*M^2", "1*N^1/0", "0*N^2", "1*N^-1"] {
            assert!(bad.parse::<GrowthSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn table_is_a_step_function() {
        let g = GrowthSpec::table(vec![(10, 5), (20, 50), (30, 500)]).unwrap();
        assert_eq!(g.eval(1), 5);
        assert_eq!(g.eval(10), 5);
        assert_eq!(g.eval(19), 5);
        assert_eq!(g.eval(20), 50);
        assert_eq!(g.eval(1000), 500);
        assert!(GrowthSpec::table(vec![(10, 5), (10, 6)]).is_err());
        assert!(GrowthSpec::table(vec![(10, 5), (11, 4)]).is_err());
    }

    #[test]
    fn power_law_is_non_decreasing() {
        for s in ["1*N^3/2", "0.3*N^2", "1*N^1/3", "7*N"] {
            let g = spec(s);
            let mut prev = 0;
            for n in 1..500 {
                let v = g.eval(n);
                assert!(v >= prev && v >= 2);
                prev = v;
            }
        }
    }
}
