use std::process::{Command, Output};

use serde_json::Value;

fn fibsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = fibsum(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn text_field(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .map(|v| v.trim().to_owned())
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn finite_recurrence() {
    let o = fibsum(&["finite", "--m", "1", "--n", "5", "--x", "1", "--method", "recurrence"]);
    assert!(o.status.success());
    assert_eq!(text_field(&stdout(&o), "exact:"), "46");
}

#[test]
fn finite_methods_agree() {
    let args = ["finite", "--m", "3", "--n", "12", "--x", "-7/4"];
    let values: Vec<Value> = ["direct", "lemma32", "recurrence", "auto"]
        .iter()
        .map(|m| {
            let mut a = args.to_vec();
            a.extend(["--method", m]);
            json(&a)["exact"].clone()
        })
        .collect();
    assert!(values.windows(2).all(|w| w[0] == w[1]), "{values:?}");
}

#[test]
fn example_one_one() {
    let o = fibsum(&["series", "--m", "1", "--x", "1/3"]);
    let out = stdout(&o);
    assert_eq!(text_field(&out, "exact:"), "6/5");
    assert_eq!(text_field(&out, "decimal:"), "1.20000000000");
    let base = json(&["series", "--m", "1", "--x", "1/3", "--method", "baseline"]);
    assert_eq!(base["exact"], "6/5");
    assert_eq!(base["method"], "baseline");
}

#[test]
fn example_one_two_rendering() {
    let v = json(&["series", "--m", "50", "--x", "1/3", "--digits", "4"]);
    assert_eq!(v["decimal"], "6.526e74");
}

#[test]
fn json_schema_keys() {
    let v = json(&["finite", "--m", "2", "--n", "3", "--x", "1/2"]);
    for key in ["command", "m", "n", "x", "method", "exact", "decimal", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "finite");
    assert_eq!(v["exact"], "15/4");
    assert_eq!(v["x"], "1/2");
    assert_eq!(v["method"], "recurrence");
    let s = json(&["series", "--m", "0", "--x", "0"]);
    assert_eq!(s["n"], Value::Null);
    assert_eq!(s["exact"], "0");
}

#[test]
fn text_and_json_exact_values_match() {
    let cases: [&[&str]; 5] = [
        &["finite", "--m", "4", "--n", "17", "--x", "5/7"],
        &["series", "--m", "7", "--x", "-3/5"],
        &["geometric", "--m", "3", "--x", "2/3"],
        &["geometric", "--m", "3", "--x", "2/3", "--method", "baseline"],
        &["fib", "--n", "90"],
    ];
    for args in cases {
        let text = text_field(&stdout(&fibsum(args)), "exact:");
        assert_eq!(json(args)["exact"], text.as_str(), "{args:?}");
    }
}

#[test]
fn divergence_exits_one() {
    let o = fibsum(&["series", "--m", "1", "--x", "2/3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1/phi"));
    let o = fibsum(&["series", "--m", "1", "--x", "5/8", "--method", "baseline"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fibsum(&["geometric", "--m", "1", "--x", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fibsum(&["fib", "--n", "-2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let bad: [&[&str]; 7] = [
        &["finite", "--m", "1", "--n", "5", "--x", "0.5"],
        &["finite", "--m", "1", "--n", "5", "--x", "1/0"],
        &["finite", "--m", "1", "--n", "5", "--x", "1", "--method", "baseline"],
        &["finite", "--m", "0", "--n", "5", "--x", "1", "--method", "lemma32"],
        &["series", "--m", "1", "--x", "1/3", "--method", "direct"],
        &["series", "--m", "1", "--x", "1/3", "--digits", "0"],
        &["frobnicate"],
    ];
    for args in bad {
        let o = fibsum(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn identities_report() {
    let v = json(&["identities"]);
    assert_eq!(v["cases_failed"], 0);
    assert_eq!(v["first_failure"], Value::Null);
    assert_eq!(v["cases_total"], 8984);
    assert_eq!(v["grids"].as_array().unwrap().len(), 6);
    let o = fibsum(&["identities", "--sequential"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("total: 8984 cases, 0 failed"));
}

#[test]
fn bench_reports_equality_and_growth() {
    let v = json(&["bench", "--m", "20", "--x", "-1/2"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["superlinear"], true);
    assert_eq!(v["baseline_growth"].as_array().unwrap().len(), 5);
    assert!(v["baseline_peak_bits"].as_u64().unwrap() > v["recurrence_peak_bits"].as_u64().unwrap());
    let o = fibsum(&["bench", "--m", "5", "--x", "2/3"]);
    assert_eq!(o.status.code(), Some(1));
}
