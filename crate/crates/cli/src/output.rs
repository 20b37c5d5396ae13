//! Records are JSON objects; `json` prints one per line, `table` lines them
//! up in right-aligned columns.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub type Record = Map<String, Value>;

#[macro_export]
macro_rules! record {
    ($($key:literal => $value:expr),* $(,)?) => {{
        let mut r = $crate::output::Record::new();
        $( r.insert($key.to_string(), serde_json::json!($value)); )*
        r
    }};
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => records
            .iter()
            .map(|r| format!("{}\n", Value::Object(r.clone())))
            .collect(),
        Format::Table => table(records),
    }
}

fn table(records: &[Record]) -> String {
    let mut columns: Vec<&str> = Vec::new();
    for r in records {
        for key in r.keys() {
            if !columns.contains(&key.as_str()) {
                columns.push(key);
            }
        }
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| r.get(*c).map(cell).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            rows.iter()
                .map(|row| row[i].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(columns.clone());
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}
