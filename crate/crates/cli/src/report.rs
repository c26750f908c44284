//! Reports and their plain-text and JSON renderings.

use serde::Serialize;
use serde_json::{Map, Value};

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        Report {
            command: command.to_string(),
            params,
            result: Value::Null,
            witness: None,
            error: None,
            warnings: Vec::new(),
            millis: None,
            exit_code: EXIT_OK,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        flatten(&mut out, "params.", &Value::Object(self.params.clone()));
        if let Some(e) = &self.error {
            out.push_str(&format!("error[{}]: {}\n", e.code, e.message));
        }
        match self.result.get("entries") {
            Some(Value::Array(entries)) => suite_lines(&mut out, entries, &self.result["summary"]),
            _ => flatten(&mut out, "", &self.result),
        }
        if let Some(w) = &self.witness {
            flatten(&mut out, "witness.", w);
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if let Some(ms) = self.millis {
            out.push_str(&format!("millis: {ms}\n"));
        }
        out
    }
}

fn suite_lines(out: &mut String, entries: &[Value], summary: &Value) {
    for e in entries {
        let pass = e["pass"].as_bool().unwrap_or(false);
        out.push_str(&format!(
            "{} [{}] {}: {}\n",
            if pass { "PASS" } else { "FAIL" },
            e["criterion"],
            scalar(&e["id"]),
            scalar(&e["claim"]),
        ));
        if !pass {
            out.push_str(&format!("    expected: {}\n    observed: {}\n", e["expected"], e["observed"]));
        }
    }
    out.push_str(&format!("passed {} of {}\n", summary["passed"], summary["total"]));
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Null => {}
                    Value::Object(_) => flatten(out, &format!("{prefix}{k}."), v),
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        for (n, item) in items.iter().enumerate() {
                            flatten(out, &format!("{prefix}{k}[{n}]."), item);
                        }
                    }
                    Value::Array(items) => {
                        let parts: Vec<String> = items.iter().map(scalar).collect();
                        out.push_str(&format!("{prefix}{k}: [{}]\n", parts.join("; ")));
                    }
                    _ => out.push_str(&format!("{prefix}{k}: {}\n", scalar(v))),
                }
            }
        }
        Value::Null => {}
        other => out.push_str(&format!("{}: {}\n", prefix.trim_end_matches('.'), scalar(other))),
    }
}
