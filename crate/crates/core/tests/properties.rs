use fibsum_core::exact::{numerator_bits, to_decimal};
use fibsum_core::series::{fib_series_sum, truncated_sum, SeriesQuery};
use fibsum_core::suite::{run_all, series_x_set};
use fibsum_core::{BigRational, Execution};
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!((&a / &b) * (&b / &a), BigRational::one());
        }
        let s = &a * &b + &c;
        prop_assert!(s.denom().is_positive());
        prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
    }
}

#[test]
fn parallel_and_sequential_grids_agree() {
    let seq = run_all(Execution::Sequential);
    let par = run_all(Execution::Parallel);
    assert_eq!(seq, par);
    for report in &seq {
        assert!(report.passed(), "{report}");
    }
}

/// Smallest `N >= 400` (in steps of 50) whose tail `sum_{r>N} r^m F_r |x|^r`
/// is provably below `tol`, using `F_r <= phi^(r-1)` and a geometric bound on
/// the term ratio `(1 + 1/r)^m phi |x|`.
fn terms_for_tail(m: u32, x: &BigRational, tol: f64) -> u32 {
    const PHI_UPPER: f64 = 1.618_034;
    let rho = PHI_UPPER * x.abs().to_f64().unwrap();
    assert!(rho < 1.0);
    let mut n = 400u32;
    loop {
        let r = (n + 1) as f64;
        let kappa = (1.0 + 1.0 / r).powi(m as i32) * rho;
        if kappa < 1.0 {
            let log_first = m as f64 * r.ln() + r * rho.ln() - PHI_UPPER.ln();
            if log_first - (1.0 - kappa).ln() < tol.ln() - 10f64.ln() {
                return n;
            }
        }
        n += 50;
    }
}

#[test]
fn truncated_sums_approach_series() {
    let tiny = BigRational::new(1.into(), num_traits::pow(10.into(), 20));
    let cells: Vec<(u32, BigRational)> = series_x_set()
        .into_iter()
        .flat_map(|x| (0..=12u32).map(move |m| (m, x.clone())))
        .collect();
    Execution::default().map(&cells, |(m, x)| {
        let m = *m;
        {
            let query = SeriesQuery::new(m, x.clone());
            let exact = fib_series_sum(&query).unwrap();
            let scale = exact.abs().max(BigRational::one());
            let n = terms_for_tail(m, x, 1e-20 * scale.to_f64().unwrap().max(1.0) * 0.5);
            assert!(n >= 400);
            let err = (truncated_sum(&query, n) - &exact).abs();
            assert!(
                err < &tiny * &scale,
                "m = {m}, x = {x}, N = {n}: relative error {}",
                to_decimal(&(err / scale), 3)
            );
        }
    });
}

#[test]
fn recurrence_values_stay_small() {
    // numerators of S(1/3, m) grow far slower than the baseline expressions
    let v = fib_series_sum(&SeriesQuery::new(50, q(1, 3))).unwrap();
    assert!(numerator_bits(&v) < 400);
    assert_eq!(v.denom(), &num_traits::pow(fibsum_core::BigInt::from(5), 14));
}
