//! Infinite series `S(x, m) = sum_{r>=1} r^m F_r x^r` on `|x| < 1/phi`.
//!
//! Letting the upper limit grow in the finite recurrence kills the boundary
//! term, leaving a recurrence in `m` alone:
//!
//! ```text
//! S(x, 0) = x / (1 - x - x^2)
//! S(x, j) = [ sum_{i=1}^{j} C(j,i) (-1)^(i+1) S(x, j-i)
//!           + x^2 sum_{i=1}^{j} C(j,i) S(x, j-i) ] / (1 - x - x^2)
//! ```
//!
//! The convergence bound `1/phi = (sqrt 5 - 1)/2` is never computed: for real
//! `x`, `|x| < 1/phi` iff `(2|x| + 1)^2 < 5` iff `x^2 + |x| < 1`, which is
//! decided exactly on rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_row, fib_denominator};
use crate::finite::{direct_sum, FiniteSumQuery};

pub const FIB_BOUND: &str = "x^2 + |x| < 1, i.e. |x| < 1/phi";
pub const GEOMETRIC_BOUND: &str = "|x| < 1";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesQuery {
    pub m: u32,
    pub x: BigRational,
}

impl SeriesQuery {
    pub fn new(m: u32, x: BigRational) -> Self {
        Self { m, x }
    }
}

/// Whether `|x| < 1/phi`.
pub fn in_convergence_domain(x: &BigRational) -> bool {
    x * x + x.abs() < BigRational::one()
}

/// `S(x, m)` by the derivative-free recurrence.
pub fn fib_series_sum(q: &SeriesQuery) -> Result<BigRational> {
    Ok(fib_series_table(q)?.pop().expect("table holds m + 1 entries"))
}

/// `S(x, 0), ..., S(x, m)`.
pub fn fib_series_table(q: &SeriesQuery) -> Result<Vec<BigRational>> {
    if !in_convergence_domain(&q.x) {
        return Err(Error::Divergence {
            x: q.x.clone(),
            bound: FIB_BOUND,
        });
    }
    let x = &q.x;
    let d = fib_denominator(x);
    let x2 = x * x;
    let mut s = Vec::with_capacity(q.m as usize + 1);
    s.push(x / &d);
    for j in 1..=q.m {
        let binom = binomial_row(j);
        let mut alternating = BigRational::zero();
        let mut plain = BigRational::zero();
        for i in 1..=j as usize {
            let term = &s[j as usize - i] * BigRational::from_integer(binom[i].clone());
            if i % 2 == 1 {
                alternating += &term;
            } else {
                alternating -= &term;
            }
            plain += term;
        }
        s.push((alternating + &x2 * plain) / &d);
    }
    Ok(s)
}

/// `sum_{r>=1} r^m x^r` for `|x| < 1` by the analogous recurrence
/// `G(x, j) = sum_{i=1}^{j} C(j,i) (-1)^(i+1) G(x, j-i) / (1 - x)`.
pub fn geometric_series_sum(q: &SeriesQuery) -> Result<BigRational> {
    if q.x.abs() >= BigRational::one() {
        return Err(Error::Divergence {
            x: q.x.clone(),
            bound: GEOMETRIC_BOUND,
        });
    }
    let d = BigRational::one() - &q.x;
    let mut g = Vec::with_capacity(q.m as usize + 1);
    g.push(&q.x / &d);
    for j in 1..=q.m {
        let binom = binomial_row(j);
        let mut acc = BigRational::zero();
        for i in 1..=j as usize {
            let term = &g[j as usize - i] * BigRational::from_integer(binom[i].clone());
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        g.push(acc / &d);
    }
    Ok(g.pop().expect("m + 1 entries"))
}

/// The exact partial sum of the first `terms` terms.
pub fn truncated_sum(q: &SeriesQuery, terms: u32) -> BigRational {
    direct_sum(&FiniteSumQuery::new(q.m, terms, q.x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_decimal;
    use crate::finite::recurrence_sum;
    use crate::symbolic::{baseline_geometric_closed_form, baseline_series_closed_form};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sq(m: u32, x: BigRational) -> SeriesQuery {
        SeriesQuery::new(m, x)
    }

    #[test]
    fn domain_examples() {
        assert!(in_convergence_domain(&q(0, 1)));
        assert!(in_convergence_domain(&q(3, 5)));
        assert!(in_convergence_domain(&q(-3, 5)));
        assert!(!in_convergence_domain(&q(2, 3)));
        assert!(!in_convergence_domain(&q(5, 8)));
        assert!(!in_convergence_domain(&q(1, 1)));
        assert!(!in_convergence_domain(&q(-1, 1)));
        // consecutive Fibonacci ratios straddle 1/phi
        assert!(in_convergence_domain(&q(55, 89)) != in_convergence_domain(&q(89, 144)));
    }

    #[test]
    fn fib_series_anchors() {
        assert_eq!(fib_series_sum(&sq(0, q(1, 3))).unwrap(), q(3, 5));
        assert_eq!(fib_series_sum(&sq(1, q(1, 3))).unwrap(), q(6, 5));
        assert_eq!(fib_series_sum(&sq(0, q(0, 1))).unwrap(), q(0, 1));
        assert_eq!(to_decimal(&fib_series_sum(&sq(50, q(1, 3))).unwrap(), 4), "6.526e74");
    }

    #[test]
    fn divergence_is_reported() {
        for x in [q(2, 3), q(-2, 3), q(1, 1), q(-1, 1), q(5, 8)] {
            match fib_series_sum(&sq(1, x.clone())) {
                Err(Error::Divergence { x: at, bound }) => {
                    assert_eq!(at, x);
                    assert!(bound.contains("1/phi"));
                }
                other => panic!("expected divergence at {x}, got {other:?}"),
            }
        }
    }

    #[test]
    fn geometric_anchors() {
        assert_eq!(geometric_series_sum(&sq(0, q(1, 2))).unwrap(), q(1, 1));
        assert_eq!(geometric_series_sum(&sq(1, q(1, 2))).unwrap(), q(2, 1));
        assert_eq!(geometric_series_sum(&sq(2, q(1, 3))).unwrap(), q(3, 2));
        assert!(matches!(
            geometric_series_sum(&sq(2, q(1, 1))),
            Err(Error::Divergence { .. })
        ));
        assert!(matches!(
            geometric_series_sum(&sq(0, q(-3, 2))),
            Err(Error::Divergence { .. })
        ));
    }

    #[test]
    fn geometric_partial_sum_approaches_limit() {
        // brute force to r = 200
        let x = q(1, 3);
        let mut partial = BigRational::zero();
        let mut xr = x.clone();
        for r in 1..=200i64 {
            partial += q(r * r, 1) * &xr;
            xr *= &x;
        }
        assert!((partial - q(3, 2)).abs() < q(1, 1_000_000_000));
    }

    #[test]
    fn truncation_anchors() {
        assert_eq!(truncated_sum(&sq(1, q(1, 3)), 1), q(1, 3));
        assert_eq!(truncated_sum(&sq(0, q(0, 1)), 10), q(0, 1));
        let err = (truncated_sum(&sq(1, q(1, 3)), 60) - q(6, 5)).abs();
        assert!(err < q(1, 10_000_000_000));
    }

    #[test]
    fn agrees_with_differentiation_baseline() {
        for x in [q(1, 3), q(-1, 3), q(1, 2), q(-1, 2), q(3, 5), q(-3, 5)] {
            for m in 0..=12 {
                let base = baseline_series_closed_form(m).eval(&x).unwrap();
                assert_eq!(fib_series_sum(&sq(m, x.clone())).unwrap(), base, "m = {m}, x = {x}");
            }
        }
        for x in [q(1, 2), q(-1, 2), q(2, 3), q(-9, 10)] {
            for m in 0..=10 {
                let base = baseline_geometric_closed_form(m).eval(&x).unwrap();
                assert_eq!(
                    geometric_series_sum(&sq(m, x.clone())).unwrap(),
                    base,
                    "m = {m}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn finite_sums_approach_series_monotonically() {
        let x = q(1, 3);
        for m in 0..=5 {
            let limit = fib_series_sum(&sq(m, x.clone())).unwrap();
            let errs: Vec<BigRational> = [10, 20, 40, 80]
                .iter()
                .map(|&n| (recurrence_sum(&FiniteSumQuery::new(m, n, x.clone())) - &limit).abs())
                .collect();
            for w in errs.windows(2) {
                assert!(w[1] < w[0], "m = {m}");
            }
        }
    }
}
