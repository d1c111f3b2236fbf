use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// `C(m, i)` by the multiplicative formula.
pub fn binomial(m: u32, i: u32) -> Result<BigInt> {
    if i > m {
        return Err(Error::domain(format!("binomial({m}, {i}): i exceeds m")));
    }
    let i = i.min(m - i);
    let mut acc = BigInt::one();
    for k in 0..i {
        // acc = C(m, k) here, so the division below is exact
        acc = acc * (m - k) / (k + 1);
    }
    Ok(acc)
}

/// The row `C(m, 0), ..., C(m, m)`.
pub fn binomial_row(m: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for k in 0..m {
        acc = acc * (m - k) / (k + 1);
        row.push(acc.clone());
    }
    row
}
