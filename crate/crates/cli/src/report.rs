use serde_json::{json, Map, Value};
use sixvertex::classical::CheckResult;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    pub data: Value,
}

impl Entry {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, pass: bool, data: Value) -> Self {
        Self { name: name.into(), anchor: anchor.into(), pass, data }
    }

    /// An equality between two coefficient lists, failing at the first difference.
    pub fn compare(name: impl Into<String>, anchor: impl Into<String>, lhs: &[String], rhs: &[String]) -> Self {
        let n = lhs.len().max(rhs.len());
        let first = (0..n).find(|&k| lhs.get(k) != rhs.get(k));
        let mut data = json!({ "order": n, "first_failure": first });
        if let Some(k) = first {
            data["lhs"] = json!(lhs.get(k));
            data["rhs"] = json!(rhs.get(k));
        }
        Self::new(name, anchor, first.is_none(), data)
    }

    pub fn from_check(c: &CheckResult) -> Self {
        Self::new(
            c.name.clone(),
            c.anchor,
            c.passed(),
            json!({ "order": c.order, "first_failure": c.first_failure }),
        )
    }

    fn status(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Vec<Entry>,
    pub elapsed_ms: Option<u128>,
    /// `(exponent, value)` lines for the plain series format
    pub coefficients: Option<Vec<(usize, String)>>,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>) -> Self {
        Self { command: command.into(), params, results: Vec::new(), elapsed_ms: None, coefficients: None }
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|e| e.pass)
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|e| json!({ "name": e.name, "anchor": e.anchor, "status": e.status(), "data": e.data }))
            .collect();
        json!({
            "schema": 1,
            "command": self.command,
            "params": self.params,
            "results": results,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        if let Some(cs) = &self.coefficients {
            for (k, v) in cs {
                out.push_str(&format!("{k}: {v}\n"));
            }
            for e in self.results.iter().filter(|e| !e.pass) {
                out.push_str(&format!("FAIL {} {}\n", e.name, e.data));
            }
        } else {
            for e in &self.results {
                let tag = if e.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag} {}: {}\n", e.name, plain_data(&e.data)));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms}\n"));
        }
        out
    }
}

fn plain_data(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
