//! Minimal computer-algebra kernel: dense polynomials and canonical rational
//! functions over the rationals, plus the operator `D = x d/dx`.
//!
//! This is the differentiation baseline the recurrences are measured against:
//! `S(x, 0) = x / (1 - x - x^2)` and `S(x, j) = D S(x, j - 1)`.

mod poly;
mod ratfunc;

pub use poly::Polynomial;
pub use ratfunc::{ArithOp, RationalFunction};

use crate::error::Result;

/// `a op b`, canonicalized.
pub fn rf_arith(a: &RationalFunction, b: &RationalFunction, op: ArithOp) -> Result<RationalFunction> {
    a.arith(b, op)
}

/// `D f = x f'(x)`.
pub fn apply_d(f: &RationalFunction) -> RationalFunction {
    if f.is_zero() {
        return RationalFunction::zero();
    }
    &RationalFunction::x() * &f.derivative()
}

/// `x / (1 - x - x^2)`, the Fibonacci generating function.
pub fn fib_generating_function() -> RationalFunction {
    RationalFunction::new(Polynomial::x(), Polynomial::from_ints(&[1, -1, -1])).expect("nonzero denominator")
}

/// `x / (1 - x)`, the geometric generating function.
pub fn geometric_generating_function() -> RationalFunction {
    RationalFunction::new(Polynomial::x(), Polynomial::from_ints(&[1, -1])).expect("nonzero denominator")
}

/// `sum r^m F_r x^r` in closed form, by `m` applications of [`apply_d`].
pub fn baseline_series_closed_form(m: u32) -> RationalFunction {
    iterate_d(fib_generating_function(), m, |_| {})
}

/// `sum r^m x^r` in closed form, by `m` applications of [`apply_d`].
pub fn baseline_geometric_closed_form(m: u32) -> RationalFunction {
    iterate_d(geometric_generating_function(), m, |_| {})
}

/// Like [`baseline_series_closed_form`], also returning the expression size
/// ([`RationalFunction::size_bits`]) after each step `0..=m`.
pub fn baseline_series_closed_form_traced(m: u32) -> (RationalFunction, Vec<u64>) {
    let mut sizes = Vec::with_capacity(m as usize + 1);
    let f = iterate_d(fib_generating_function(), m, |f| sizes.push(f.size_bits()));
    (f, sizes)
}

fn iterate_d(mut f: RationalFunction, m: u32, mut observe: impl FnMut(&RationalFunction)) -> RationalFunction {
    observe(&f);
    for _ in 0..m {
        f = apply_d(&f);
        observe(&f);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn d_on_generating_function() {
        let s1 = apply_d(&fib_generating_function());
        let expected = RationalFunction::new(p(&[0, 1, 0, 1]), &p(&[1, -1, -1]) * &p(&[1, -1, -1])).unwrap();
        assert_eq!(s1, expected);
        assert_eq!(s1.eval(&q(1, 3)).unwrap(), q(6, 5));
    }

    #[test]
    fn d_on_trivial_inputs() {
        assert_eq!(apply_d(&RationalFunction::constant(q(7, 2))), RationalFunction::zero());
        assert_eq!(apply_d(&RationalFunction::x()), RationalFunction::x());
        assert_eq!(apply_d(&RationalFunction::zero()), RationalFunction::zero());
    }

    #[test]
    fn baseline_low_orders() {
        assert_eq!(baseline_series_closed_form(0), fib_generating_function());
        assert_eq!(baseline_series_closed_form(0).eval(&q(1, 3)).unwrap(), q(3, 5));
        assert_eq!(baseline_series_closed_form(1).eval(&q(1, 3)).unwrap(), q(6, 5));
        assert_eq!(baseline_series_closed_form(0).eval(&q(0, 1)).unwrap(), q(0, 1));
        // x(1 + x) / (1 - x)^3
        let g2 = RationalFunction::new(p(&[0, 1, 1]), p(&[1, -3, 3, -1])).unwrap();
        assert_eq!(baseline_geometric_closed_form(2), g2);
    }

    #[test]
    fn reduced_denominator_is_a_power_of_the_base() {
        let base = p(&[-1, 1, 1]);
        let mut pow = base.clone();
        for m in 0..8 {
            assert_eq!(baseline_series_closed_form(m).den(), &pow, "m = {m}");
            pow = &pow * &base;
        }
    }

    #[test]
    fn traced_sizes_cover_every_step() {
        let (f, sizes) = baseline_series_closed_form_traced(6);
        assert_eq!(f, baseline_series_closed_form(6));
        assert_eq!(sizes.len(), 7);
        assert_eq!(*sizes.last().unwrap(), f.size_bits());
    }

    fn small_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| Polynomial::from_ints(&c))
    }

    /// Rational functions whose denominators stay away from zero on [-1/2, 1/2].
    fn tame_rf() -> impl Strategy<Value = RationalFunction> {
        (small_poly(4), -2i64..=2, -2i64..=2).prop_map(|(num, a, b)| RationalFunction::new(num, p(&[5, a, b])).unwrap())
    }

    fn small_q() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonicalization_is_idempotent(f in tame_rf(), g in tame_rf()) {
            let h = &f * &g;
            let again = RationalFunction::new(h.num().clone(), h.den().clone()).unwrap();
            prop_assert_eq!(again, h);
        }

        #[test]
        fn d_is_linear(f in tame_rf(), g in tame_rf(), a in small_q(), b in small_q()) {
            let ca = RationalFunction::constant(a);
            let cb = RationalFunction::constant(b);
            let lhs = apply_d(&(&(&ca * &f) + &(&cb * &g)));
            let rhs = &(&ca * &apply_d(&f)) + &(&cb * &apply_d(&g));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn d_obeys_product_rule(f in tame_rf(), g in tame_rf()) {
            let lhs = apply_d(&(&f * &g));
            let rhs = &(&apply_d(&f) * &g) + &(&f * &apply_d(&g));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_matches_central_differences(f in tame_rf(), xn in -5i64..=5) {
            let x = q(xn, 10);
            let exact = f.derivative().eval(&x).unwrap();
            let errs: Vec<BigRational> = [1_000i64, 10_000, 100_000]
                .iter()
                .map(|&inv| {
                    let h = q(1, inv);
                    let fd = (f.eval(&(&x + &h)).unwrap() - f.eval(&(&x - &h)).unwrap()) / (&h + &h);
                    (fd - &exact).abs()
                })
                .collect();
            // second-order scheme: each tenfold step shrinks the error unless it is already zero
            for w in errs.windows(2) {
                prop_assert!(w[1] < w[0] || w[1].is_zero());
            }
            prop_assert!(errs[2] < q(1, 1_000_000));
        }
    }
}
