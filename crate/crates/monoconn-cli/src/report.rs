//! Structured command output: an ordered list of key-value fields, printed
//! either as one greppable `key value` line each or as a single JSON object
//! with the same field order.

use serde_json::{Map, Value};

#[derive(Clone, Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.fields.push((key.into(), value.into()));
    }

    /// Flat text form: `key value`, one field per line. Arrays of scalars
    /// are space-joined; anything nested falls back to compact JSON.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(k);
            out.push(' ');
            out.push_str(&render(v));
            out.push('\n');
        }
        out
    }

    /// JSON object form, fields in insertion order.
    pub fn json(&self) -> String {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            map.insert(k.clone(), v.clone());
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(map))
            .expect("a report of plain values serialises");
        out.push('\n');
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => items
            .iter()
            .map(render)
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
