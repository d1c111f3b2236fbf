use clap::{Args, Parser, Subcommand, ValueEnum};
use fibsum_core::exact::{parse_rational, DEFAULT_DIGITS};
use fibsum_core::BigRational;

/// Exact Fibonacci-weighted power sums: sum r^m F_r x^r.
#[derive(Debug, Parser)]
#[command(name = "fibsum", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Significant digits of the decimal rendering.
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS as u32, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The Fibonacci number F_n (n >= -1).
    Fib {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// sum_{r=1}^{n} r^m F_r x^r.
    Finite {
        #[command(flatten)]
        power: Power,
        /// Upper summation limit.
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// sum_{r>=1} r^m F_r x^r for x^2 + |x| < 1.
    Series {
        #[command(flatten)]
        power: Power,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// sum_{r>=1} r^m x^r for |x| < 1.
    Geometric {
        #[command(flatten)]
        power: Power,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Cross-check every method against its oracle over the built-in grids.
    Identities {
        /// Run the grids on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Time the series recurrence against symbolic differentiation.
    Bench {
        #[arg(long, default_value_t = 50)]
        m: u32,
        #[arg(long, default_value = "1/3", value_parser = rational, allow_hyphen_values = true)]
        x: BigRational,
    },
}

#[derive(Debug, Args)]
pub struct Power {
    /// Power of the summation index.
    #[arg(long)]
    pub m: u32,
}

#[derive(Debug, Args)]
pub struct Point {
    /// Evaluation point: an integer or p/q.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Lemma32,
    Recurrence,
    Baseline,
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Lemma32 => "lemma32",
            Method::Recurrence => "recurrence",
            Method::Baseline => "baseline",
            Method::Auto => "auto",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}
