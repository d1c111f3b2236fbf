use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `F_n` for `n >= -1` by fast doubling, with `F_-1 = 1`.
pub fn fib(n: i64) -> Result<BigInt> {
    match n {
        -1 => Ok(BigInt::one()),
        n if n < -1 => Err(Error::domain(format!("fib index {n} is below -1"))),
        n => Ok(fib_pair(n as u64).0),
    }
}

/// `(F_n, F_{n+1})`.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // F_2k = F_k (2 F_{k+1} - F_k), F_2k+1 = F_k^2 + F_{k+1}^2
        let c = &a * ((&b << 1) - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 0 {
            (a, b) = (c, d);
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// Memoized Fibonacci table indexed from `-1`, filled by the plain recurrence.
///
/// The cache is guarded by a lock so one table can be shared across threads;
/// [`FibSequence::global`] is the process-wide instance.
#[derive(Debug)]
pub struct FibSequence {
    // cache[i] holds F_{i-1}
    cache: RwLock<Vec<BigInt>>,
}

impl Default for FibSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl FibSequence {
    pub fn new() -> Self {
        Self {
            cache: RwLock::new(vec![BigInt::one(), BigInt::zero(), BigInt::one()]),
        }
    }

    pub fn global() -> &'static FibSequence {
        static GLOBAL: OnceLock<FibSequence> = OnceLock::new();
        GLOBAL.get_or_init(FibSequence::new)
    }

    /// Number of cached entries, counting from index `-1`.
    pub fn cached_len(&self) -> usize {
        self.cache.read().expect("fib cache poisoned").len()
    }

    pub fn get(&self, n: i64) -> Result<BigInt> {
        Ok(self.range(n, n)?.pop().expect("range of one"))
    }

    /// `F_lo ..= F_hi`. An empty vector when `hi < lo`.
    pub fn range(&self, lo: i64, hi: i64) -> Result<Vec<BigInt>> {
        if lo < -1 {
            return Err(Error::domain(format!("fib index {lo} is below -1")));
        }
        if hi < lo {
            return Ok(Vec::new());
        }
        let (start, end) = ((lo + 1) as usize, (hi + 1) as usize);
        {
            let cache = self.cache.read().expect("fib cache poisoned");
            if end < cache.len() {
                return Ok(cache[start..=end].to_vec());
            }
        }
        let mut cache = self.cache.write().expect("fib cache poisoned");
        while cache.len() <= end {
            let k = cache.len();
            let next = &cache[k - 1] + &cache[k - 2];
            cache.push(next);
        }
        Ok(cache[start..=end].to_vec())
    }
}
