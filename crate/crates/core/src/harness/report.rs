use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        [Format::Json, Format::Csv, Format::Text]
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown {
                kind: "format",
                name: s.to_string(),
            })
    }
}

/// A result tagged with the graph it came from.
#[derive(Clone, Debug, Serialize)]
pub struct Entry<T> {
    pub graph6: String,
    #[serde(flatten)]
    pub value: T,
}

fn to_object<T: Serialize>(item: &T) -> Result<Map<String, Value>> {
    match serde_json::to_value(item)? {
        Value::Object(map) => Ok(map),
        other => {
            let mut map = Map::new();
            map.insert("value".into(), other);
            Ok(map)
        }
    }
}

/// Scalars print bare; `null` prints empty; arrays and objects as compact JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_rows(rows: &[Map<String, Value>]) -> Result<String> {
    let mut header: Vec<&String> = Vec::new();
    for row in rows {
        for key in row.keys() {
            if !header.contains(&key) {
                header.push(key);
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    if !header.is_empty() {
        w.write_record(&header).map_err(csv_error)?;
    }
    for row in rows {
        let record = header
            .iter()
            .map(|k| row.get(*k).map(cell).unwrap_or_default());
        w.write_record(record).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.into())
}

fn text_row(row: &Map<String, Value>) -> String {
    row.iter()
        .map(|(k, v)| format!("{k}: {}", cell(v)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Renders a list of results. JSON is a compact array (`[]` when empty),
/// CSV has one header row, text separates records with blank lines.
pub fn report<T: Serialize>(items: &[T], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string(items)? + "\n"),
        Format::Csv => csv_rows(&items.iter().map(to_object).collect::<Result<Vec<_>>>()?),
        Format::Text => {
            let rows = items.iter().map(to_object).collect::<Result<Vec<_>>>()?;
            Ok(rows
                .iter()
                .map(|r| text_row(r) + "\n")
                .collect::<Vec<_>>()
                .join("\n"))
        }
    }
}

/// Renders one result: a bare JSON object, a CSV header plus one row, or
/// `key: value` lines.
pub fn report_one<T: Serialize>(item: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string(item)? + "\n"),
        Format::Csv => csv_rows(&[to_object(item)?]),
        Format::Text => Ok(text_row(&to_object(item)?) + "\n"),
    }
}
