//! Cost comparison between the series recurrence and the differentiation
//! baseline.
//!
//! Besides wall time, both routes report the bit length of their largest
//! intermediate value: for the recurrence, the largest numerator among
//! `S(x, 0..=m)`; for the baseline, the largest canonical closed form
//! `D^j (x / (1 - x - x^2))`, measured as total coefficient bits of numerator
//! and denominator.

use std::time::{Duration, Instant};

use num_rational::BigRational;

use crate::error::Result;
use crate::exact::numerator_bits;
use crate::series::{fib_series_table, SeriesQuery};
use crate::symbolic::baseline_series_closed_form_traced;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodCost {
    pub elapsed: Duration,
    pub peak_bits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodComparison {
    pub m: u32,
    pub x: BigRational,
    pub recurrence_value: BigRational,
    pub baseline_value: BigRational,
    pub recurrence: MethodCost,
    pub baseline: MethodCost,
    /// Baseline expression size after each differentiation, index = power.
    pub baseline_sizes: Vec<u64>,
}

impl MethodComparison {
    pub fn equal(&self) -> bool {
        self.recurrence_value == self.baseline_value
    }

    /// `(m, size)` pairs for the requested powers that were computed.
    pub fn growth_at(&self, powers: &[u32]) -> Vec<(u32, u64)> {
        powers
            .iter()
            .filter_map(|&m| self.baseline_sizes.get(m as usize).map(|&s| (m, s)))
            .collect()
    }
}

pub fn compare_series_methods(q: &SeriesQuery) -> Result<MethodComparison> {
    let start = Instant::now();
    let table = fib_series_table(q)?;
    let rec_elapsed = start.elapsed();
    let rec_peak = table.iter().map(numerator_bits).max().unwrap_or(0);
    let recurrence_value = table.last().expect("m + 1 entries").clone();

    let start = Instant::now();
    let (form, sizes) = baseline_series_closed_form_traced(q.m);
    let baseline_value = form.eval(&q.x)?;
    let base_elapsed = start.elapsed();

    Ok(MethodComparison {
        m: q.m,
        x: q.x.clone(),
        recurrence_value,
        baseline_value,
        recurrence: MethodCost {
            elapsed: rec_elapsed,
            peak_bits: rec_peak,
        },
        baseline: MethodCost {
            elapsed: base_elapsed,
            peak_bits: sizes.iter().copied().max().unwrap_or(0),
        },
        baseline_sizes: sizes,
    })
}

/// True when `size(m) / m` strictly increases along `points`, i.e. the sizes
/// grow faster than any linear function through the origin.
pub fn is_superlinear(points: &[(u32, u64)]) -> bool {
    points.len() >= 2
        && points.windows(2).all(|w| {
            let ((m0, s0), (m1, s1)) = (w[0], w[1]);
            m0 > 0 && m1 > m0 && (s1 as u128) * (m0 as u128) > (s0 as u128) * (m1 as u128)
        })
}
