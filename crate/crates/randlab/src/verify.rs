//! Oracle-versus-closed-form checks over a built-in grid of small spaces.
//!
//! Every grid point whose space fits the enumeration budget is walked once.
//! The walk tallies every class count the checks need, then each closed form
//! is compared with the tally as an exact rational.

use std::fmt::Write as _;
use std::ops::Range;

use artin_randlab_core::classify::{
    is_22_free, is_cone, is_connected, is_fc_type, is_k_join, is_two_dimensional,
};
use artin_randlab_core::exact::{self, ExactProb, CASE10_COEFFICIENT, CASE9_COEFFICIENT};
use artin_randlab_core::montecarlo::partition;
use artin_randlab_core::oracle::{checked_size, for_each_in_range, x_statistic};
use artin_randlab_core::{BigRational, DefiningGraph, EnumBudget, Label, Result, SampleSpace};

use crate::parallel::map_ranges;

/// Spaces smaller than this are left out of the grid; their checks hold
/// trivially or by hand and the acceptance suite runs them directly.
pub const MIN_GRID_GRAPHS: u64 = 16;

fn space_size(n: usize, m: u32) -> u64 {
    (m as u64).pow((n * (n - 1) / 2) as u32)
}

/// `(n, m)` points the suite visits, smallest spaces first: `3 <= n <= 6`,
/// `2 <= m <= 6`, at least [`MIN_GRID_GRAPHS`] graphs.
pub fn grid() -> Vec<(usize, u32)> {
    let mut g: Vec<_> = (3..=6)
        .flat_map(|n| (2..=6).map(move |m| (n, m)))
        .filter(|&(n, m)| space_size(n, m) >= MIN_GRID_GRAPHS)
        .collect();
    g.sort_by_key(|&(n, m)| space_size(n, m));
    g
}

fn note(name: &str, n: usize, m: u32, detail: String, holds: bool) -> String {
    let verdict = if holds { "holds" } else { "violated" };
    format!("note: {name} n={n} m={m}: {detail} {verdict} (conditional form, not checked)")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Report {
    fn record(&mut self, line: String, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail => self.failed += 1,
            Outcome::Skipped => self.skipped += 1,
        }
        self.lines.push(line);
    }

    fn check(&mut self, name: &str, n: usize, m: u32, detail: String, ok: bool) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        self.record(format!("{name} n={n} m={m}: {detail} {verdict}"), outcome);
    }

    fn info(&mut self, line: String) {
        self.lines.push(line);
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Counts gathered in one pass over a space.
#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    graphs: u64,
    /// No label among the first `k` finite symbols `2..k+1`, `k = 0, 1, 2`.
    avoid_small: [u64; 3],
    avoid_inf: u64,
    free22: u64,
    sum_x: u128,
    sum_x2: u128,
    x_nonzero: u64,
    cone: u64,
    /// 2-join, inf-join, 3-join.
    joins: [u64; 3],
    dim2_and_free22: u64,
    dim2_not_free22: u64,
    fc: u64,
    connected: u64,
    free22_and_connected: u64,
    free22_or_connected: u64,
}

impl Tally {
    fn add(&mut self, g: &DefiningGraph, m: u32) -> Result<()> {
        self.graphs += 1;
        let smallest = g.edges().map(|(_, _, l)| l).min().unwrap_or(u32::MAX);
        for k in 0..3u32 {
            // Labels 2..=k+1 are absent iff the smallest finite label exceeds k+1.
            self.avoid_small[k as usize] += u64::from(smallest > k + 1);
        }
        self.avoid_inf += u64::from(g.pairs().all(|(_, _, l)| l.is_finite()));
        let free22 = is_22_free(g);
        self.free22 += u64::from(free22);
        let x = x_statistic(g) as u128;
        self.sum_x += x;
        self.sum_x2 += x * x;
        self.x_nonzero += u64::from(x != 0);
        self.cone += u64::from(is_cone(g));
        if g.n() >= 2 {
            self.joins[0] += u64::from(is_k_join(g, Label::Finite(2))?);
            self.joins[1] += u64::from(is_k_join(g, Label::Infinite)?);
            if m >= 3 {
                self.joins[2] += u64::from(is_k_join(g, Label::Finite(3))?);
            }
        }
        let dim2 = is_two_dimensional(g);
        self.dim2_and_free22 += u64::from(dim2 && free22);
        self.dim2_not_free22 += u64::from(dim2 && !free22);
        self.fc += u64::from(is_fc_type(g)?);
        let conn = is_connected(g);
        self.connected += u64::from(conn);
        self.free22_and_connected += u64::from(free22 && conn);
        self.free22_or_connected += u64::from(free22 || conn);
        Ok(())
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.graphs += o.graphs;
        for k in 0..3 {
            self.avoid_small[k] += o.avoid_small[k];
            self.joins[k] += o.joins[k];
        }
        self.avoid_inf += o.avoid_inf;
        self.free22 += o.free22;
        self.sum_x += o.sum_x;
        self.sum_x2 += o.sum_x2;
        self.x_nonzero += o.x_nonzero;
        self.cone += o.cone;
        self.dim2_and_free22 += o.dim2_and_free22;
        self.dim2_not_free22 += o.dim2_not_free22;
        self.fc += o.fc;
        self.connected += o.connected;
        self.free22_and_connected += o.free22_and_connected;
        self.free22_or_connected += o.free22_or_connected;
        self
    }
}

fn tally_range(space: SampleSpace, range: Range<u64>) -> Result<Tally> {
    let mut t = Tally::default();
    let mut failure = None;
    for_each_in_range(space, range, |g| {
        if failure.is_none() {
            if let Err(e) = t.add(g, space.m()) {
                failure = Some(e);
            }
        }
    });
    failure.map_or(Ok(t), Err)
}

fn tally(space: SampleSpace, total: u64, threads: usize) -> Result<Tally> {
    map_ranges(partition(total, threads), |r| tally_range(space, r))
        .into_iter()
        .try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

fn exact_rational(p: &ExactProb) -> BigRational {
    p.rational().cloned().expect("small spaces keep exact rationals")
}

fn run_point(report: &mut Report, space: SampleSpace, t: &Tally) -> Result<()> {
    let (n, m) = (space.n(), space.m());
    let total = t.graphs;
    let q = |c: u64| BigRational::new(c.into(), total.into());
    let q128 = |c: u128| BigRational::new(c.into(), total.into());

    for k in 0..3u32 {
        if k < m {
            let want = exact_rational(&exact::prob_forbidden_labels(n, m, k)?);
            let got = q(t.avoid_small[k as usize]);
            report.check(
                &format!("forbidden_k{k}"),
                n,
                m,
                format!("{got} == {want}"),
                got == want,
            );
        }
    }
    let want = exact_rational(&exact::prob_forbidden_labels(n, m, 1)?);
    let got = q(t.avoid_inf);
    report.check("forbidden_inf", n, m, format!("{got} == {want}"), got == want);

    let want = exact_rational(&exact::prob_22_free_exact(n, m));
    let got = q(t.free22);
    report.check("22free", n, m, format!("{got} == {want}"), got == want);

    if n >= 3 {
        let want = exact::expectation_x(n, m)?;
        let got = q128(t.sum_x);
        report.check("expectation_x", n, m, format!("{got} == {want}"), got == want);
    }
    let want = exact::expectation_x2(n, m).e_x2;
    let got = q128(t.sum_x2);
    report.check("expectation_x2", n, m, format!("{got} == {want}"), got == want);

    let lower = exact_rational(&exact::second_moment_lower_bound(n, m));
    let upper = exact_rational(&exact::markov_upper_bound(n, m));
    let p = q(t.x_nonzero);
    report.check(
        "second_moment",
        n,
        m,
        format!("{lower} <= {p} <= {upper}"),
        lower <= p && p <= upper,
    );

    let bound = exact_rational(&exact::cone_upper_bound(n, m));
    let p = q(t.cone);
    report.check("cone_bound", n, m, format!("{p} <= {bound}"), p <= bound);

    if n >= 2 {
        let bound = exact_rational(&exact::join_upper_bound(n, m));
        let ks: &[&str] = if m >= 3 { &["2", "inf", "3"] } else { &["2", "inf"] };
        for (idx, k) in ks.iter().enumerate() {
            let p = q(t.joins[idx]);
            report.check(&format!("join_bound k={k}"), n, m, format!("{p} <= {bound}"), p <= bound);
        }
    }

    // 2-dimensional versus (2,2)-free, both directions. Below three vertices
    // nothing is 2-dimensional by convention, so there is nothing to compare.
    if n >= 3 {
        let b = q(t.free22);
        let deficit = &b - q(t.dim2_and_free22);
        let bound = exact_rational(&exact::two_dim_deficit_bound(n, m));
        report.check("two_dim_deficit", n, m, format!("{deficit} <= {bound}"), deficit <= bound);
        let excess = q(t.dim2_not_free22);
        let bound = exact_rational(&exact::two_dim_excess_bound(n, m));
        report.check("two_dim_excess", n, m, format!("{excess} <= {bound}"), excess <= bound);
        // The conditional forms are heuristics and only reported.
        let one = BigRational::from_integer(1.into());
        if let Some(fail) = exact::two_dim_failure_given_22_free_bound(n, m) {
            let rhs = (&one - exact_rational(&fail)) * &b;
            let lhs = q(t.dim2_and_free22);
            report.info(note("two_dim_given_22free", n, m, format!("{lhs} >= {rhs}"), lhs >= rhs));
        }
        let rhs = (&one - &b) * exact_rational(&exact::two_dim_given_not_22_free_bound(m));
        report.info(note("two_dim_not_22free", n, m, format!("{excess} <= {rhs}"), excess <= rhs));
    }

    if n >= 3 {
        let bound = exact_rational(&exact::fc_type_upper_bound(n, m));
        let p = q(t.fc);
        report.check("fc_bound", n, m, format!("{p} <= {bound}"), p <= bound);
    }

    let lhs = q(t.free22_and_connected) + q(t.free22_or_connected);
    let rhs = q(t.free22) + q(t.connected);
    report.check("intersection_identity", n, m, format!("{lhs} == {rhs}"), lhs == rhs);
    Ok(())
}

/// Runs every check on one space, whatever its size within `budget`.
pub fn check_space(space: SampleSpace, budget: EnumBudget, threads: usize) -> Result<Report> {
    let total = checked_size(space, budget)?;
    let mut report = Report::default();
    run_point(&mut report, space, &tally(space, total, threads)?)?;
    Ok(report)
}

/// Runs every check on every grid point that fits `budget`.
pub fn run(budget: EnumBudget, threads: usize) -> Result<Report> {
    let mut report = Report::default();
    let mut visited = 0;
    for (n, m) in grid() {
        let space = SampleSpace::new(n, m)?;
        match checked_size(space, budget) {
            Ok(total) => {
                let t = tally(space, total, threads)?;
                run_point(&mut report, space, &t)?;
                visited += 1;
            }
            Err(_) => {
                let size = exact::count_graphs(n, m);
                report.record(
                    format!(
                        "grid n={n} m={m}: {size} graphs exceed budget {} SKIPPED",
                        budget.max_graphs
                    ),
                    Outcome::Skipped,
                );
            }
        }
    }
    let mut note = String::new();
    write!(
        note,
        "info: case9 coefficient resolved to {CASE9_COEFFICIENT} (matches enumeration of E[X^2]; \
         an asymptotic reading of 2 N^3 m^-3 does not); case10 term {CASE10_COEFFICIENT} (n)_4 m^-4 \
         included"
    )
    .expect("writing to a String");
    report.info(note);
    if visited == 0 {
        report.info(format!(
            "warning: no grid point fits the budget of {} graphs; all checks SKIPPED",
            budget.max_graphs
        ));
    }
    report.info(format!(
        "summary: {} passed, {} failed, {} skipped",
        report.passed, report.failed, report.skipped
    ));
    Ok(report)
}
