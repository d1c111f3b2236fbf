use serde::Serialize;
use serde_json::{Map, Value};

use fibsum_core::exact::to_decimal;
use fibsum_core::BigRational;

/// One command's result. The first eight fields are always emitted in JSON,
/// `null` where they do not apply.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub m: Option<u32>,
    pub n: Option<i64>,
    pub x: Option<String>,
    pub method: Option<&'static str>,
    pub exact: Option<String>,
    pub decimal: Option<String>,
    pub elapsed_ms: f64,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            ..Default::default()
        }
    }

    pub fn with_value(mut self, v: &BigRational, digits: u32) -> Self {
        self.exact = Some(v.to_string());
        self.decimal = Some(to_decimal(v, digits as usize));
        self
    }

    pub fn extra(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extra.insert(key.to_owned(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head = vec![self.command.to_owned()];
        if let Some(m) = self.m {
            head.push(format!("m={m}"));
        }
        if let Some(n) = self.n {
            head.push(format!("n={n}"));
        }
        if let Some(x) = &self.x {
            head.push(format!("x={x}"));
        }
        if let Some(method) = self.method {
            head.push(format!("method={method}"));
        }
        out.push_str(&head.join(" "));
        out.push('\n');
        for note in &self.notes {
            out.push_str(note);
            out.push('\n');
        }
        if let Some(exact) = &self.exact {
            out.push_str(&format!("exact:   {exact}\n"));
        }
        if let Some(decimal) = &self.decimal {
            out.push_str(&format!("decimal: {decimal}\n"));
        }
        out.push_str(&format!("elapsed: {:.3} ms\n", self.elapsed_ms));
        out
    }
}
