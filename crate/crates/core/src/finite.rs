//! Finite sums `sum_{r=1}^{n} r^m F_r x^r`.
//!
//! [`direct_sum`] is the literal definition and serves as the oracle.
//! [`recurrence_sum`] obtains the same value from sums of lower powers: with
//! `d = 1 - x - x^2` and `T(j, u) = sum_{r=1}^{u} r^j F_r x^r`,
//!
//! ```text
//! d T(j, u) =      sum_{i=1}^{j} C(j,i) (-1)^(i+1) T(j-i, u)
//!           + x^2 sum_{i=1}^{j} C(j,i)           T(j-i, u-1)
//!           - u^j (F_{u+1} x^{u+1} + F_u x^{u+2})
//! ```
//!
//! and the power-zero row closed by [`fib_geometric_partial`]. Since each step
//! reaches back one upper limit, a query `(m, n)` touches only the limits
//! `n-m ..= n`, giving an `(m+1) x (m+1)` table.
//!
//! At `x = -1` the boundary term is `-u^j ((-1)^(u+1) F_{u+1} + (-1)^(u+2) F_u)`;
//! the index on the first Fibonacci factor is `u+1`, not the power.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_row, fib, fib_denominator, FibSequence};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSumQuery {
    pub m: u32,
    pub n: u32,
    pub x: BigRational,
}

impl FiniteSumQuery {
    pub fn new(m: u32, n: u32, x: BigRational) -> Self {
        Self { m, n, x }
    }
}

fn pow_u(x: &BigRational, e: u64) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

fn int_pow(base: u64, e: u32) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(base), e as usize))
}

/// Term-by-term `sum_{r=1}^{n} r^m F_r x^r`.
///
/// With `x = p/q` the terms are accumulated as integers over the common
/// denominator `q^n`: `A_r = A_{r-1} q + r^m F_r p^r`, then `A_n / q^n`.
pub fn direct_sum(q: &FiniteSumQuery) -> BigRational {
    let (p, d) = (q.x.numer(), q.x.denom());
    let mut acc = BigInt::zero();
    let (mut f_prev, mut f) = (BigInt::zero(), BigInt::one());
    let mut pr = p.clone();
    for r in 1..=q.n as u64 {
        acc *= d;
        if !f.is_zero() && !pr.is_zero() {
            acc += num_traits::pow(BigInt::from(r), q.m as usize) * &f * &pr;
        }
        let next = &f + &f_prev;
        f_prev = std::mem::replace(&mut f, next);
        pr *= p;
    }
    BigRational::new(acc, num_traits::pow(d.clone(), q.n as usize))
}

/// `sum_{r=k}^{n} F_r x^r` in closed form:
/// `(F_k x^k + F_{k-1} x^{k+1} - F_{n+1} x^{n+1} - F_n x^{n+2}) / (1 - x - x^2)`.
pub fn fib_geometric_partial(k: u32, n: u32, x: &BigRational) -> Result<BigRational> {
    if k > n {
        return Err(Error::domain(format!(
            "partial sum from {k} to {n}: lower limit exceeds upper"
        )));
    }
    let fibs = FibSequence::global();
    let (k, n) = (k as i64, n as i64);
    let f = |i: i64| BigRational::from_integer(fibs.get(i).expect("index >= -1"));
    let xk = pow_u(x, k as u64);
    let xn1 = pow_u(x, n as u64 + 1);
    let top = f(k) * &xk + f(k - 1) * &xk * x - f(n + 1) * &xn1 - f(n) * &xn1 * x;
    Ok(top / fib_denominator(x))
}

/// The power sum rearranged by telescoping `r^m - (r-1)^m`:
///
/// ```text
/// [ sum_{r=1}^{n} (r^m - (r-1)^m)(F_r x^r + F_{r-1} x^{r+1})
///   - n^m (F_{n+1} x^{n+1} + F_n x^{n+2}) ] / (1 - x - x^2)
/// ```
///
/// Only valid for `m >= 1`; at `m = 0` every difference vanishes, so use
/// [`fib_geometric_partial`] with `k = 1` instead.
pub fn lemma32_sum(q: &FiniteSumQuery) -> Result<BigRational> {
    if q.m == 0 {
        return Err(Error::domain(
            "the telescoped form needs m >= 1; use the closed partial sum (fib_geometric_partial with k = 1) for m = 0",
        ));
    }
    let n = q.n as i64;
    let fibs = FibSequence::global().range(-1, n + 1)?;
    // fibs[i + 1] = F_i
    let f = |i: i64| BigRational::from_integer(fibs[(i + 1) as usize].clone());
    let mut acc = BigRational::zero();
    let mut xr = q.x.clone();
    let mut prev_pow = BigRational::zero();
    for r in 1..=n {
        let pow = int_pow(r as u64, q.m);
        acc += (&pow - &prev_pow) * (f(r) * &xr + f(r - 1) * &xr * &q.x);
        prev_pow = pow;
        xr *= &q.x;
    }
    // xr = x^{n+1} here
    let boundary = if n == 0 {
        BigRational::zero()
    } else {
        int_pow(n as u64, q.m) * (f(n + 1) * &xr + f(n) * &xr * &q.x)
    };
    Ok((acc - boundary) / fib_denominator(&q.x))
}

/// DP table of `T(j, u) = sum_{r=1}^{u} r^j F_r x^r` for `j = 0..=m` and the
/// upper limits each row needs, `max(0, n - (m - j)) ..= n`.
#[derive(Debug, Clone)]
pub struct RecurrenceTable {
    m: u32,
    n: u32,
    rows: Vec<Vec<BigRational>>,
}

impl RecurrenceTable {
    pub fn build(q: &FiniteSumQuery) -> Self {
        let (m, n) = (q.m as i64, q.n as i64);
        let x = &q.x;
        let lo = (n - m).max(0);
        let d = fib_denominator(x);
        let x2 = x * x;

        let fibs = FibSequence::global().range(lo, n + 1).expect("lo >= 0");
        let f = |u: i64| BigRational::from_integer(fibs[(u - lo) as usize].clone());
        // boundary[u - lo] = F_{u+1} x^{u+1} + F_u x^{u+2}
        let mut xu1 = pow_u(x, lo as u64 + 1);
        let mut boundary = Vec::with_capacity((n - lo + 1) as usize);
        for u in lo..=n {
            boundary.push(f(u + 1) * &xu1 + f(u) * &xu1 * x);
            xu1 *= x;
        }

        let row_lo = |j: i64| (n - (m - j)).max(0);
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m as usize + 1);
        rows.push(
            (row_lo(0)..=n)
                .map(|u| {
                    if u == 0 {
                        BigRational::zero()
                    } else {
                        fib_geometric_partial(1, u as u32, x).expect("1 <= u")
                    }
                })
                .collect(),
        );
        for j in 1..=m {
            let binom: Vec<BigRational> = binomial_row(j as u32)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            let get = |rows: &Vec<Vec<BigRational>>, jj: i64, u: i64| -> BigRational {
                if u <= 0 {
                    return BigRational::zero();
                }
                rows[jj as usize][(u - row_lo(jj)) as usize].clone()
            };
            let row: Vec<BigRational> = (row_lo(j)..=n)
                .map(|u| {
                    if u == 0 {
                        return BigRational::zero();
                    }
                    let mut alternating = BigRational::zero();
                    let mut plain = BigRational::zero();
                    for i in 1..=j {
                        let c = &binom[i as usize];
                        let same = get(&rows, j - i, u) * c;
                        if i % 2 == 1 {
                            alternating += same;
                        } else {
                            alternating -= same;
                        }
                        plain += get(&rows, j - i, u - 1) * c;
                    }
                    let edge = int_pow(u as u64, j as u32) * &boundary[(u - lo) as usize];
                    (alternating + &x2 * plain - edge) / &d
                })
                .collect();
            rows.push(row);
        }
        Self { m: q.m, n: q.n, rows }
    }

    /// `T(j, u)`, or `None` outside the computed range.
    pub fn get(&self, j: u32, u: u32) -> Option<&BigRational> {
        let lo = self.lowest_limit(j)?;
        if u < lo || u > self.n {
            return None;
        }
        self.rows[j as usize].get((u - lo) as usize)
    }

    /// The smallest upper limit stored for power `j`.
    pub fn lowest_limit(&self, j: u32) -> Option<u32> {
        (j <= self.m).then(|| self.n.saturating_sub(self.m - j))
    }

    pub fn value(&self) -> &BigRational {
        self.get(self.m, self.n).expect("top cell is always present")
    }
}

/// Evaluates the power sum from lower powers via the binomial recurrence.
pub fn recurrence_sum(q: &FiniteSumQuery) -> BigRational {
    RecurrenceTable::build(q).value().clone()
}

/// Closed forms for a few classical Fibonacci sums.
///
/// The upper limits are those of the standard statements: [`SumF`](Self::SumF)
/// and [`AltF`](Self::AltF) sum to `n - 1`, the others to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `sum_{r=1}^{n-1} F_r = F_{n+1} - 1`
    SumF,
    /// `sum_{r=1}^{n} r F_r = n F_{n+2} - F_{n+3} + 2`
    SumRf,
    /// `sum_{r=1}^{n} r^2 F_r = (n^2 + 2) F_{n+2} - (2n - 3) F_{n+3} - 8`
    SumR2f,
    /// `sum_{r=1}^{n-1} (-1)^r F_r = (-1)^(n-1) F_{n-2} - 1`
    AltF,
    /// `sum_{r=1}^{n} (-1)^r r F_r = (-1)^n (n+1) F_{n-1} + (-1)^(n-1) F_{n-2} - 2`
    AltRf,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [Self::SumF, Self::SumRf, Self::SumR2f, Self::AltF, Self::AltRf];

    pub fn name(self) -> &'static str {
        match self {
            Self::SumF => "SUM_F",
            Self::SumRf => "SUM_RF",
            Self::SumR2f => "SUM_R2F",
            Self::AltF => "ALT_F",
            Self::AltRf => "ALT_RF",
        }
    }

    /// The finite sum that `closed_identity(self, n)` equals.
    pub fn counterpart(self, n: u32) -> FiniteSumQuery {
        let one = BigRational::one();
        let (m, upper, x) = match self {
            Self::SumF => (0, n.saturating_sub(1), one),
            Self::SumRf => (1, n, one),
            Self::SumR2f => (2, n, one),
            Self::AltF => (0, n.saturating_sub(1), -one),
            Self::AltRf => (1, n, -one),
        };
        FiniteSumQuery::new(m, upper, x)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown identity {s:?}")))
    }
}

pub fn closed_identity(id: IdentityId, n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("closed identities are stated for n >= 1"));
    }
    let n = n as i64;
    let f = |i: i64| fib(i).expect("n >= 1 keeps every index >= -1");
    let sign = |e: i64| {
        if e.rem_euclid(2) == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let nb = BigInt::from(n);
    let v: BigInt = match id {
        IdentityId::SumF => f(n + 1) - 1,
        IdentityId::SumRf => &nb * f(n + 2) - f(n + 3) + 2,
        IdentityId::SumR2f => (&nb * &nb + 2) * f(n + 2) - (2 * &nb - 3) * f(n + 3) - 8,
        IdentityId::AltF => sign(n - 1) * f(n - 2) - 1,
        IdentityId::AltRf => sign(n) * (&nb + 1) * f(n - 1) + sign(n - 1) * f(n - 2) - 2,
    };
    Ok(BigRational::from_integer(v))
}
