//! Cross-method verification grids.
//!
//! Each grid enumerates independent cases, evaluates them under an
//! [`Execution`] strategy and reports how many disagreed with their oracle.

use std::fmt;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exec::Execution;
use crate::finite::{
    closed_identity, direct_sum, fib_geometric_partial, lemma32_sum, recurrence_sum, FiniteSumQuery, IdentityId,
};
use crate::series::{fib_series_sum, geometric_series_sum, SeriesQuery};
use crate::symbolic::{baseline_geometric_closed_form, baseline_series_closed_form};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Evaluation points for the finite-sum grids.
pub fn finite_x_set() -> Vec<BigRational> {
    vec![q(1, 1), q(-1, 1), q(1, 2), q(-1, 3), q(2, 1), q(5, 7), q(-7, 4)]
}

/// Evaluation points for the series grids, all inside `|x| < 1/phi`.
pub fn series_x_set() -> Vec<BigRational> {
    vec![q(1, 3), q(-1, 3), q(1, 2), q(-1, 2), q(3, 5), q(-3, 5)]
}

/// Evaluation points for the geometric grid, all inside `|x| < 1`.
pub fn geometric_x_set() -> Vec<BigRational> {
    vec![q(1, 2), q(-1, 2), q(1, 3), q(2, 3), q(-9, 10)]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridReport {
    pub name: &'static str,
    pub cases_total: usize,
    pub cases_failed: usize,
    pub first_failure: Option<String>,
}

impl GridReport {
    fn from_outcomes(name: &'static str, outcomes: Vec<Option<String>>) -> Self {
        let cases_total = outcomes.len();
        let mut failures = outcomes.into_iter().flatten();
        let first_failure = failures.next();
        let cases_failed = failures.count() + first_failure.is_some() as usize;
        Self {
            name,
            cases_total,
            cases_failed,
            first_failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }
}

impl fmt::Display for GridReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<12} {}/{} cases agree",
            self.name,
            self.cases_total - self.cases_failed,
            self.cases_total
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "; first failure: {first}")?;
        }
        Ok(())
    }
}

fn mismatch(what: String, got: &BigRational, want: &BigRational) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got}, expected {want}"))
}

fn finite_cases(ms: RangeInclusive<u32>, ns: RangeInclusive<u32>) -> Vec<FiniteSumQuery> {
    let mut cases = Vec::new();
    for x in finite_x_set() {
        for m in ms.clone() {
            cases.extend(ns.clone().map(|n| FiniteSumQuery::new(m, n, x.clone())));
        }
    }
    cases
}

/// `recurrence_sum == direct_sum` for `m in 0..=8`, `n in 0..=40` over [`finite_x_set`].
pub fn oracle_grid(exec: Execution) -> GridReport {
    let cases = finite_cases(0..=8, 0..=40);
    let outcomes = exec.map(&cases, |c| {
        mismatch(
            format!("recurrence m={} n={} x={}", c.m, c.n, c.x),
            &recurrence_sum(c),
            &direct_sum(c),
        )
    });
    GridReport::from_outcomes("recurrence", outcomes)
}

/// The telescoped form against `direct_sum` for `m in 1..=8`, `n in 0..=40`.
pub fn lemma32_grid(exec: Execution) -> GridReport {
    let cases = finite_cases(1..=8, 0..=40);
    let outcomes = exec.map(&cases, |c| match lemma32_sum(c) {
        Ok(v) => mismatch(format!("lemma32 m={} n={} x={}", c.m, c.n, c.x), &v, &direct_sum(c)),
        Err(e) => Some(format!("lemma32 m={} n={} x={}: {e}", c.m, c.n, c.x)),
    });
    GridReport::from_outcomes("lemma32", outcomes)
}

/// Closed partial sums `sum_{r=k}^{n} F_r x^r` for `0 <= k <= n <= 30` against
/// a term-by-term loop.
pub fn partial_sum_grid(exec: Execution) -> GridReport {
    let mut cases = Vec::new();
    for x in finite_x_set() {
        for n in 0..=30u32 {
            cases.extend((0..=n).map(|k| (k, n, x.clone())));
        }
    }
    let outcomes = exec.map(&cases, |(k, n, x)| {
        let (mut a, mut b) = (BigRational::zero(), BigRational::from_integer(1.into()));
        let mut xr = BigRational::from_integer(1.into());
        let mut want = BigRational::zero();
        for r in 0..=*n {
            if r >= *k {
                want += &a * &xr;
            }
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
            xr *= x;
        }
        match fib_geometric_partial(*k, *n, x) {
            Ok(got) => mismatch(format!("partial k={k} n={n} x={x}"), &got, &want),
            Err(e) => Some(format!("partial k={k} n={n} x={x}: {e}")),
        }
    });
    GridReport::from_outcomes("partial-sum", outcomes)
}

/// Every cataloged identity against its direct sum for `n in 1..=100`.
pub fn identity_grid(exec: Execution) -> GridReport {
    let cases: Vec<(IdentityId, u32)> = IdentityId::ALL
        .into_iter()
        .flat_map(|id| (1..=100).map(move |n| (id, n)))
        .collect();
    let outcomes = exec.map(&cases, |&(id, n)| match closed_identity(id, n) {
        Ok(v) => mismatch(format!("{id} n={n}"), &v, &direct_sum(&id.counterpart(n))),
        Err(e) => Some(format!("{id} n={n}: {e}")),
    });
    GridReport::from_outcomes("identities", outcomes)
}

/// The series recurrence against the differentiated closed form, `m in 0..=12`.
pub fn baseline_grid(exec: Execution) -> GridReport {
    let forms: Vec<_> = (0..=12).map(baseline_series_closed_form).collect();
    let cases: Vec<(u32, BigRational)> = series_x_set()
        .into_iter()
        .flat_map(|x| (0..=12).map(move |m| (m, x.clone())))
        .collect();
    let outcomes = exec.map(&cases, |(m, x)| {
        let what = format!("series m={m} x={x}");
        match (
            fib_series_sum(&SeriesQuery::new(*m, x.clone())),
            forms[*m as usize].eval(x),
        ) {
            (Ok(got), Ok(want)) => mismatch(what, &got, &want),
            (Err(e), _) | (_, Err(e)) => Some(format!("{what}: {e}")),
        }
    });
    GridReport::from_outcomes("baseline", outcomes)
}

/// The geometric recurrence against `D^m (x / (1 - x))`, `m in 0..=10`.
pub fn geometric_grid(exec: Execution) -> GridReport {
    let forms: Vec<_> = (0..=10).map(baseline_geometric_closed_form).collect();
    let cases: Vec<(u32, BigRational)> = geometric_x_set()
        .into_iter()
        .flat_map(|x| (0..=10).map(move |m| (m, x.clone())))
        .collect();
    let outcomes = exec.map(&cases, |(m, x)| {
        let what = format!("geometric m={m} x={x}");
        match (
            geometric_series_sum(&SeriesQuery::new(*m, x.clone())),
            forms[*m as usize].eval(x),
        ) {
            (Ok(got), Ok(want)) => mismatch(what, &got, &want),
            (Err(e), _) | (_, Err(e)) => Some(format!("{what}: {e}")),
        }
    });
    GridReport::from_outcomes("geometric", outcomes)
}

/// All grids, in a fixed order.
pub fn run_all(exec: Execution) -> Vec<GridReport> {
    vec![
        oracle_grid(exec),
        lemma32_grid(exec),
        partial_sum_grid(exec),
        identity_grid(exec),
        baseline_grid(exec),
        geometric_grid(exec),
    ]
}
