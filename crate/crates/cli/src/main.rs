mod args;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use serde_json::json;

use fibsum_core::cost::{compare_series_methods, is_superlinear};
use fibsum_core::exact::fib;
use fibsum_core::finite::{direct_sum, lemma32_sum, recurrence_sum, FiniteSumQuery};
use fibsum_core::series::{fib_series_sum, geometric_series_sum, in_convergence_domain, SeriesQuery, FIB_BOUND};
use fibsum_core::suite::run_all;
use fibsum_core::symbolic::{baseline_geometric_closed_form, baseline_series_closed_form};
use fibsum_core::{BigRational, Error, Execution};

use args::{Cli, Command, Format, Method};
use report::Report;

/// What a command produced: a report to print and whether it counts as success.
struct Outcome {
    report: Report,
    ok: bool,
}

fn usage_error(msg: String) -> ! {
    Cli::command().error(ErrorKind::ArgumentConflict, msg).exit()
}

fn resolve_method(cmd: &'static str, method: Method, m: u32) -> Method {
    match (cmd, method) {
        (_, Method::Auto) => Method::Recurrence,
        ("finite", Method::Baseline) => usage_error("--method baseline applies to series only".into()),
        ("finite", Method::Lemma32) if m == 0 => {
            usage_error("--method lemma32 needs --m >= 1; use recurrence or auto for m = 0".into())
        }
        ("series" | "geometric", Method::Direct | Method::Lemma32) => {
            usage_error(format!("--method {} applies to finite sums only", method.name()))
        }
        (_, method) => method,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64() * 1e3)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let digits = cli.digits;
    let outcome = match &cli.command {
        Command::Fib { n } => {
            let (v, ms) = timed(|| fib(*n));
            let v = BigRational::from_integer(v?);
            let mut report = Report::new("fib").with_value(&v, digits);
            report.n = Some(*n);
            report.elapsed_ms = ms;
            Outcome { report, ok: true }
        }
        Command::Finite {
            power,
            n,
            point,
            method,
        } => {
            let m = power.m;
            let method = resolve_method("finite", *method, m);
            let q = FiniteSumQuery::new(m, *n, point.x.clone());
            let (v, ms) = timed(|| match method {
                Method::Direct => Ok(direct_sum(&q)),
                Method::Lemma32 => lemma32_sum(&q),
                _ => Ok(recurrence_sum(&q)),
            });
            let mut report = Report::new("finite").with_value(&v?, digits);
            report.m = Some(m);
            report.n = Some(*n as i64);
            report.x = Some(point.x.to_string());
            report.method = Some(method.name());
            report.elapsed_ms = ms;
            Outcome { report, ok: true }
        }
        Command::Series { power, point, method } => {
            let method = resolve_method("series", *method, power.m);
            let q = SeriesQuery::new(power.m, point.x.clone());
            let (v, ms) = timed(|| match method {
                Method::Baseline => {
                    if !in_convergence_domain(&q.x) {
                        return Err(Error::Divergence {
                            x: q.x.clone(),
                            bound: FIB_BOUND,
                        });
                    }
                    baseline_series_closed_form(q.m).eval(&q.x)
                }
                _ => fib_series_sum(&q),
            });
            series_outcome("series", &q, method, v?, ms, digits)
        }
        Command::Geometric { power, point, method } => {
            let method = resolve_method("geometric", *method, power.m);
            let q = SeriesQuery::new(power.m, point.x.clone());
            let (v, ms) = timed(|| match method {
                Method::Baseline => {
                    // shares the recurrence's domain check
                    geometric_series_sum(&SeriesQuery::new(0, q.x.clone()))?;
                    baseline_geometric_closed_form(q.m).eval(&q.x)
                }
                _ => geometric_series_sum(&q),
            });
            series_outcome("geometric", &q, method, v?, ms, digits)
        }
        Command::Identities { sequential } => {
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let (reports, ms) = timed(|| run_all(exec));
            let total: usize = reports.iter().map(|r| r.cases_total).sum();
            let failed: usize = reports.iter().map(|r| r.cases_failed).sum();
            let first = reports.iter().find_map(|r| r.first_failure.clone());
            let grids: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "cases_total": r.cases_total,
                        "cases_failed": r.cases_failed,
                        "first_failure": r.first_failure,
                    })
                })
                .collect();
            let mut report = Report::new("identities")
                .extra("cases_total", total)
                .extra("cases_failed", failed)
                .extra("first_failure", first.clone())
                .extra("grids", grids);
            report.elapsed_ms = ms;
            report.notes = reports.iter().map(ToString::to_string).collect();
            report.notes.push(format!("total: {total} cases, {failed} failed"));
            if let Some(first) = first {
                report.notes.push(format!("first failure: {first}"));
            }
            Outcome {
                report,
                ok: failed == 0,
            }
        }
        Command::Bench { m, x } => {
            let q = SeriesQuery::new(*m, x.clone());
            let (c, ms) = timed(|| compare_series_methods(&q));
            let c = c?;
            let step = (*m / 5).max(1);
            let powers: Vec<u32> = (1..=*m / step).map(|k| k * step).collect();
            let growth = c.growth_at(&powers);
            let superlinear = is_superlinear(&growth);
            let rec_ms = c.recurrence.elapsed.as_secs_f64() * 1e3;
            let base_ms = c.baseline.elapsed.as_secs_f64() * 1e3;
            let mut report = Report::new("bench")
                .with_value(&c.recurrence_value, digits)
                .extra("recurrence_ms", rec_ms)
                .extra("baseline_ms", base_ms)
                .extra("equal", c.equal())
                .extra("recurrence_peak_bits", c.recurrence.peak_bits)
                .extra("baseline_peak_bits", c.baseline.peak_bits)
                .extra(
                    "baseline_growth",
                    growth
                        .iter()
                        .map(|(m, bits)| json!({ "m": m, "bits": bits }))
                        .collect::<Vec<_>>(),
                )
                .extra("superlinear", superlinear);
            report.m = Some(*m);
            report.x = Some(x.to_string());
            report.method = Some("recurrence+baseline");
            report.elapsed_ms = ms;
            report.notes = vec![
                format!(
                    "recurrence: {rec_ms:.3} ms, peak numerator {} bits",
                    c.recurrence.peak_bits
                ),
                format!(
                    "baseline:   {base_ms:.3} ms, peak expression {} bits",
                    c.baseline.peak_bits
                ),
                format!("equal: {}", c.equal()),
                format!("baseline expression size by power (superlinear: {superlinear}):"),
            ];
            report
                .notes
                .extend(growth.iter().map(|(m, bits)| format!("  m={m:<4} {bits} bits")));
            Outcome { report, ok: c.equal() }
        }
    };
    Ok(outcome)
}

fn series_outcome(cmd: &'static str, q: &SeriesQuery, method: Method, v: BigRational, ms: f64, digits: u32) -> Outcome {
    let mut report = Report::new(cmd).with_value(&v, digits);
    report.m = Some(q.m);
    report.x = Some(q.x.to_string());
    report.method = Some(method.name());
    report.elapsed_ms = ms;
    Outcome { report, ok: true }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { report, ok }) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: methods disagree");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
