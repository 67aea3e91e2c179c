//! Table-producing experiments: estimates and sweeps over `n`, closed forms,
//! and the (2,2)-free series along `m = floor(N^(3/2))`.

use std::fmt;
use std::str::FromStr;

use artin_randlab_core::exact::{self, ExactProb};
use artin_randlab_core::{
    BigRational, EnumBudget, Error, GrowthSpec, Predicate, SampleSpace,
};

use crate::parallel;
use crate::table::{ConjectureRow, Row};
use crate::CliError;

/// Inclusive `start:stop:step` list of vertex counts. `stop` is included
/// only when it lies on the step grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub stop: usize,
    pub step: usize,
}

impl NRange {
    pub fn single(n: usize) -> Self {
        NRange { start: n, stop: n, step: 1 }
    }

    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.stop).step_by(self.step).collect()
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| format!("bad vertex count {t:?} in {s:?}"));
        let r = match parts.as_slice() {
            [n] => NRange::single(num(n)?),
            [a, b] => NRange { start: num(a)?, stop: num(b)?, step: 1 },
            [a, b, c] => NRange { start: num(a)?, stop: num(b)?, step: num(c)? },
            _ => return Err(format!("expected n or start:stop[:step], got {s:?}")),
        };
        if r.step == 0 {
            return Err("range step must be positive".into());
        }
        if r.start > r.stop {
            return Err(format!("range {s:?} is not ascending"));
        }
        Ok(r)
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// Where `m` comes from: a constant or a growth function of `n`.
#[derive(Debug, Clone, PartialEq)]
pub enum MSource {
    Fixed(u64),
    Growth(GrowthSpec),
}

impl MSource {
    pub fn space(&self, n: usize) -> Result<SampleSpace, Error> {
        let m = match self {
            MSource::Fixed(m) => *m,
            MSource::Growth(g) => g.eval(n),
        };
        let m = u32::try_from(m).map_err(|_| Error::BadLabel(m))?;
        SampleSpace::new(n, m)
    }

    fn asymptote(&self, predicate: Predicate) -> Option<f64> {
        match self {
            MSource::Fixed(_) => None,
            MSource::Growth(g) => exact::asymptote(predicate, g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub confidence: f64,
    pub threads: usize,
}

/// One Monte Carlo row per `n`, with the closed form and the limiting value
/// filled in when they exist. Rows follow the order of `ns`.
pub fn sweep(
    predicate: Predicate,
    ms: &MSource,
    ns: &[usize],
    cfg: McConfig,
) -> Result<Vec<Row>, Error> {
    if ns.is_empty() {
        return Err(Error::TooSmall { need: 1, got: 0 });
    }
    ns.iter()
        .map(|&n| {
            let space = ms.space(n)?;
            let e = parallel::estimate(
                predicate,
                space,
                cfg.samples,
                cfg.seed,
                cfg.confidence,
                cfg.threads,
            )?;
            let mut row = Row::new(n, space.m() as u64, predicate.to_string());
            row.exact = exact::closed_form(predicate, n, space.m()).map(|p| p.value());
            row.p_hat = Some(e.p_hat);
            row.ci_low = Some(e.ci_low);
            row.ci_high = Some(e.ci_high);
            row.samples = Some(e.samples);
            row.seed = Some(e.seed);
            row.asymptote = ms.asymptote(predicate);
            Ok(row)
        })
        .collect()
}

/// What `exact --formula` evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Formula {
    /// Probability that none of `k` fixed alphabet symbols occurs.
    Forbidden(u32),
    /// Closed form of a class probability (label classes, (2,2)-free).
    Closed(Predicate),
    /// Exhaustive count of a class.
    Oracle(Predicate),
    ExpectationX,
    ExpectationX2,
    SecondMomentLowerBound,
    MarkovUpperBound,
    ConeUpperBound,
    JoinUpperBound,
    FcTypeUpperBound,
}

impl Formula {
    /// Parses a formula name. `forbidden` needs `k`; `oracle` needs a
    /// predicate. Any other name is read as a predicate with a closed form.
    pub fn parse(name: &str, k: Option<u32>, predicate: Option<Predicate>) -> Result<Self, CliError> {
        let need = |what: &str| CliError::Usage(format!("--formula {name} requires --{what}"));
        let key = name.trim().to_ascii_lowercase().replace('-', "_");
        Ok(match key.as_str() {
            "forbidden" => Formula::Forbidden(k.ok_or_else(|| need("k"))?),
            "oracle" => Formula::Oracle(predicate.ok_or_else(|| need("predicate"))?),
            "expectation_x" | "ex" => Formula::ExpectationX,
            "expectation_x2" | "ex2" => Formula::ExpectationX2,
            "second_moment" | "second_moment_lower_bound" => Formula::SecondMomentLowerBound,
            "markov" | "markov_upper_bound" => Formula::MarkovUpperBound,
            "cone_bound" | "cone_upper_bound" => Formula::ConeUpperBound,
            "join_bound" | "join_upper_bound" => Formula::JoinUpperBound,
            "fc_bound" | "fc_type_upper_bound" => Formula::FcTypeUpperBound,
            _ => Formula::Closed(name.parse()?),
        })
    }

    pub fn label(&self) -> String {
        match self {
            Formula::Forbidden(k) => format!("forbidden_k{k}"),
            Formula::Closed(p) | Formula::Oracle(p) => p.to_string(),
            Formula::ExpectationX => "expectation_x".into(),
            Formula::ExpectationX2 => "expectation_x2".into(),
            Formula::SecondMomentLowerBound => "second_moment_lower_bound".into(),
            Formula::MarkovUpperBound => "markov_upper_bound".into(),
            Formula::ConeUpperBound => "cone_upper_bound".into(),
            Formula::JoinUpperBound => "join_upper_bound".into(),
            Formula::FcTypeUpperBound => "fc_type_upper_bound".into(),
        }
    }

    pub fn evaluate(
        &self,
        space: SampleSpace,
        budget: EnumBudget,
        threads: usize,
    ) -> Result<f64, CliError> {
        let (n, m) = (space.n(), space.m());
        let rational = |r: BigRational| ExactProb::from_rational(r).value();
        Ok(match *self {
            Formula::Forbidden(k) => exact::prob_forbidden_labels(n, m, k)?.value(),
            Formula::Closed(p) => exact::closed_form(p, n, m)
                .ok_or_else(|| {
                    CliError::Usage(format!(
                        "no closed form for {p}; use --formula oracle --predicate {p}"
                    ))
                })?
                .value(),
            Formula::Oracle(p) => rational(parallel::exact_probability(p, space, budget, threads)?),
            Formula::ExpectationX => rational(exact::expectation_x(n, m)?),
            Formula::ExpectationX2 => rational(exact::expectation_x2(n, m).e_x2),
            Formula::SecondMomentLowerBound => exact::second_moment_lower_bound(n, m).value(),
            Formula::MarkovUpperBound => exact::markov_upper_bound(n, m).value(),
            Formula::ConeUpperBound => exact::cone_upper_bound(n, m).value(),
            Formula::JoinUpperBound => exact::join_upper_bound(n, m).value(),
            Formula::FcTypeUpperBound => exact::fc_type_upper_bound(n, m).value(),
        })
    }
}

pub fn exact_rows(
    formula: Formula,
    ms: &MSource,
    ns: &[usize],
    budget: EnumBudget,
    threads: usize,
) -> Result<Vec<Row>, CliError> {
    ns.iter()
        .map(|&n| {
            let space = ms.space(n)?;
            let mut row = Row::new(n, space.m() as u64, formula.label());
            row.exact = Some(formula.evaluate(space, budget, threads)?);
            if let Formula::Closed(p) | Formula::Oracle(p) = formula {
                row.asymptote = ms.asymptote(p);
            }
            Ok(row)
        })
        .collect()
}

pub const CONJECTURE_DEFAULT: NRange = NRange { start: 3, stop: 190, step: 1 };

/// `P[(2,2)-free]` at `m = floor(N^(3/2))` for each `N`, with its distance
/// to `1 - 1/e` and to `e^(-1/2)`. Uses the log-space series, so large `N`
/// cannot overflow.
pub fn conjecture_rows(ns: &[usize]) -> Result<Vec<ConjectureRow>, Error> {
    let growth = GrowthSpec::power(1.into(), (3, 2).into())?;
    let one_minus_inv_e = 1.0 - (-1.0f64).exp();
    let inv_sqrt_e = (-0.5f64).exp();
    ns.iter()
        .map(|&n| {
            let space = MSource::Growth(growth.clone()).space(n)?;
            let value = exact::prob_22_free_ln(n, space.m()).exp();
            Ok(ConjectureRow {
                n,
                m: space.m() as u64,
                value,
                dist_one_minus_inv_e: (value - one_minus_inv_e).abs(),
                dist_inv_sqrt_e: (value - inv_sqrt_e).abs(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use artin_randlab_core::ClassId;

    #[test]
    fn n_range_syntax() {
        assert_eq!("20:200:20".parse::<NRange>().unwrap().values().len(), 10);
        assert_eq!("5".parse::<NRange>().unwrap().values(), vec![5]);
        assert_eq!("3:6".parse::<NRange>().unwrap().values(), vec![3, 4, 5, 6]);
        assert_eq!("1:10:4".parse::<NRange>().unwrap().values(), vec![1, 5, 9]);
        for bad in ["5:3", "1:5:0", "a", "1:2:3:4", ""] {
            assert!(bad.parse::<NRange>().is_err(), "{bad}");
        }
    }

    #[test]
    fn growth_source() {
        let ms = MSource::Growth("1*N^3/2".parse().unwrap());
        assert_eq!(ms.space(5).unwrap().m(), 11);
        assert_eq!(MSource::Fixed(1).space(5), Err(Error::BadLabel(1)));
        assert_eq!(MSource::Fixed(1 << 40).space(5), Err(Error::BadLabel(1 << 40)));
    }

    #[test]
    fn conjecture_small_row() {
        let rows = conjecture_rows(&[3]).unwrap();
        assert_eq!(rows[0].m, 5);
        assert!((rows[0].value - 0.896).abs() < 1e-12);
    }

    #[test]
    fn formula_names() {
        let f = Formula::parse("22free", None, None).unwrap();
        assert_eq!(f, Formula::Closed(Predicate::class(ClassId::TwoTwoFree)));
        assert!(Formula::parse("forbidden", None, None).is_err());
        assert_eq!(Formula::parse("forbidden", Some(1), None).unwrap().label(), "forbidden_k1");
        let space = SampleSpace::new(3, 3).unwrap();
        let v = f.evaluate(space, EnumBudget::DEFAULT, 1).unwrap();
        assert!((v - 20.0 / 27.0).abs() < 1e-15);
        let cone = Formula::parse("cone", None, None).unwrap();
        assert!(matches!(cone.evaluate(space, EnumBudget::DEFAULT, 1), Err(CliError::Usage(_))));
    }
}
