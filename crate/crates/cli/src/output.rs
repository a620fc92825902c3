use serde_json::{json, Map, Value};

use crate::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// A rectangular result; `Null` cells print blank in CSV.
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new<S: Into<String>>(name: &'static str, columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            name,
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            _ => self.to_csv(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(
            &self
                .columns
                .iter()
                .map(|c| csv_field(c))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Value::Null => String::new(),
                    Value::String(s) => csv_field(s),
                    other => other.to_string(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().cloned())
                    .filter(|(_, v)| !v.is_null())
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "schemaVersion": SCHEMA_VERSION, "command": self.name, "records": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("plain JSON values");
        s.push('\n');
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Big integers go out as decimal strings so JSON readers keep every digit.
pub fn big(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

pub fn num(v: impl Into<u64>) -> Value {
    Value::from(v.into())
}

pub fn text(s: impl Into<String>) -> Value {
    Value::String(s.into())
}
