//! Exact evaluation of Fibonacci-weighted power sums
//!
//! ```text
//!     sum_{r=1}^{n} r^m F_r x^r        and        sum_{r=1}^{inf} r^m F_r x^r
//! ```
//!
//! for rational `x`, by three independent routes:
//!
//! * literal term-by-term summation ([`finite::direct_sum`], [`series::truncated_sum`]),
//! * binomial recurrences over lower powers ([`finite::recurrence_sum`],
//!   [`series::fib_series_sum`]), which never differentiate anything,
//! * a small computer-algebra kernel that applies `D = x d/dx` to the generating
//!   function `x / (1 - x - x^2)` ([`symbolic::baseline_series_closed_form`]).
//!
//! All arithmetic is exact. The [`suite`] module cross-checks the routes over
//! enumerated grids, in parallel when the `parallel` feature is on.

pub mod cost;
pub mod error;
pub mod exact;
pub mod exec;
pub mod finite;
pub mod series;
pub mod suite;
pub mod symbolic;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational};
pub use exec::Execution;
