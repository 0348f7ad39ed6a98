use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

/// One line of JSON output. Every number is a decimal string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub result: Value,
    pub errata: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str, params: BTreeMap<String, String>, result: Value, errata: Vec<String>) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION.into(), command: command.into(), params, result, errata }
    }

    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("records serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut head = vec![self.command.clone()];
        head.extend(self.params.iter().map(|(k, v)| format!("{k}={v}")));
        writeln!(out, "{}", head.join(" ")).unwrap();
        render(&self.result, 1, &mut out);
        for e in &self.errata {
            writeln!(out, "  erratum: {e}").unwrap();
        }
        out
    }
}

fn scalar_or_point(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(o) if o.len() == 2 && o.contains_key("x") && o.contains_key("y") => {
            Some(format!("({}, {})", scalar_or_point(&o["x"])?, scalar_or_point(&o["y"])?))
        }
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar_or_point(v) {
        return Some(s);
    }
    match v {
        Value::Array(a) if a.is_empty() => Some("none".into()),
        Value::Array(a) => a.iter().map(scalar_or_point).collect::<Option<Vec<_>>>().map(|v| v.join(", ")),
        Value::Object(o) => o
            .iter()
            .map(|(k, val)| scalar_or_point(val).map(|s| format!("{k}={s}")))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.join(", ")),
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => {
            for (k, val) in o {
                match inline(val) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render(val, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, val) in a.iter().enumerate() {
                match inline(val) {
                    Some(s) => writeln!(out, "{pad}[{i}] {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}[{i}]").unwrap();
                        render(val, depth + 1, out);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", inline(other).unwrap_or_default()).unwrap(),
    }
}
