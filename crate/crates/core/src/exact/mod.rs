//! Numeric substrate: arbitrary-precision rationals, Fibonacci numbers,
//! binomial coefficients and decimal rendering.
//!
//! [`BigRational`] comes from `num-rational`; it keeps every value reduced with
//! a positive denominator, and zero as `0/1`.

mod binomial;
mod decimal;
mod fib;

pub use binomial::{binomial, binomial_row};
pub use decimal::{to_decimal, DEFAULT_DIGITS};
pub use fib::{fib, FibSequence};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parses an exact rational literal: an optionally signed integer or `p/q`
/// with `q > 0`. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::domain(format!("invalid rational literal {s:?}: expected an integer or p/q"));
    let int = |t: &str, signed: bool| -> Result<BigInt> {
        let digits = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(int(s, true)?)),
        Some((p, q)) => {
            let p = int(p, true)?;
            let q = int(q, false)?;
            if q.is_zero() {
                return Err(Error::domain(format!(
                    "invalid rational literal {s:?}: zero denominator"
                )));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// `1 - x - x^2`, the denominator shared by every Fibonacci generating-function
/// formula. Its roots are irrational, so it never vanishes at a rational `x`.
pub fn fib_denominator(x: &BigRational) -> BigRational {
    let d = BigRational::one() - x - x * x;
    debug_assert!(!d.is_zero(), "1 - x - x^2 has no rational roots");
    d
}

/// `x^0, x^1, ..., x^len-1`.
pub fn powers(x: &BigRational, len: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(len);
    let mut p = BigRational::one();
    for _ in 0..len {
        let next = &p * x;
        out.push(p);
        p = next;
    }
    out
}

/// Bit length of the numerator of `q`.
pub fn numerator_bits(q: &BigRational) -> u64 {
    q.numer().abs().bits()
}
