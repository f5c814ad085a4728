//! Canonical JSON reports. Keys are sorted (serde_json's default map is a
//! `BTreeMap`) and every number is written as a decimal string.

use std::fmt::Display;

use serde_json::{json, Map, Value};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub verdict: Verdict,
}

impl Report {
    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "engine_version": ENGINE_VERSION,
            "verdict": self.verdict.as_str(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("reports serialize")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        render(&self.to_value(), 0, &mut out);
        out
    }
}

pub fn num(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn nums<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(num).collect())
}

pub fn matrix<T: Display>(rows: &[Vec<T>]) -> Value {
    Value::Array(rows.iter().map(nums).collect())
}

pub fn strs<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn object(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

// Indented key/value text; arrays of scalar rows become aligned grids.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if let Some(s) = scalar(x) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else if let Some(line) = inline(x) {
                    out.push_str(&format!("{pad}{k}: {line}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            if let Some(grid) = grid(items) {
                for row in grid {
                    out.push_str(&format!("{pad}{row}\n"));
                }
                return;
            }
            for x in items {
                match scalar(x).or_else(|| inline(x)) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn inline(v: &Value) -> Option<String> {
    let Value::Array(items) = v else { return None };
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

fn grid(rows: &[Value]) -> Option<Vec<String>> {
    if rows.is_empty() {
        return None;
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| match r {
            Value::Array(xs) if !xs.is_empty() => xs.iter().map(scalar).collect::<Option<Vec<_>>>(),
            _ => None,
        })
        .collect::<Option<_>>()?;
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    Some(cells.iter().map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ")).collect())
}
