use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{Map, Value};

/// Result of one command: an ordered list of fields for the text view, and
/// the same fields as a key-sorted object for `--json`.
#[derive(Debug, Default)]
pub struct CliOutput {
    fields: Vec<(String, Value)>,
    /// Replaces the generic text rendering when set.
    text: Option<String>,
    /// Set when `--oracle` found a disagreement.
    pub oracle_failed: bool,
}

impl CliOutput {
    pub fn new(command: &str) -> Self {
        let mut out = CliOutput::default();
        out.put("command", command);
        out
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn set_text(&mut self, text: String) {
        self.text = Some(text);
    }

    /// Records an oracle comparison under `oracle_<what>` keys.
    pub fn oracle(&mut self, what: &str, fast: impl Into<Value>, oracle: impl Into<Value>) {
        let (fast, oracle) = (fast.into(), oracle.into());
        let agrees = fast == oracle;
        self.oracle_failed |= !agrees;
        self.put(&format!("oracle_{what}"), oracle);
        self.put("oracle_agrees", agrees);
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self.fields.iter().cloned().collect();
        serde_json::to_string_pretty(&Value::Object(map)).expect("plain values serialize")
    }

    pub fn to_text(&self) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Array(items) => {
                    writeln!(out, "{key}:").unwrap();
                    for item in items {
                        writeln!(out, "  {}", scalar(item)).unwrap();
                    }
                }
                v => writeln!(out, "{key}: {}", scalar(v)).unwrap(),
            }
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// A count as a JSON number when it fits, else as a decimal string.
pub fn big(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(small) => small.into(),
        Err(_) => n.to_string().into(),
    }
}
