//! CSV and JSON rendering of row-shaped results.
//!
//! Both formats carry the same fields. In JSON, exact integers are decimal
//! strings so that no value is rounded by a consumer.

use std::io::{self, Write};

use colmahon_core::ExactInt;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Int(u64),
    Big(ExactInt),
    Text(String),
    Bool(bool),
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Int(x) => x.to_string(),
            Field::Big(x) => x.to_string(),
            Field::Text(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Int(x) => Value::from(*x),
            Field::Big(x) => Value::String(x.to_string()),
            Field::Text(s) => Value::String(s.clone()),
            Field::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<u64> for Field {
    fn from(x: u64) -> Self {
        Field::Int(x)
    }
}

impl From<usize> for Field {
    fn from(x: usize) -> Self {
        Field::Int(x as u64)
    }
}

impl From<ExactInt> for Field {
    fn from(x: ExactInt) -> Self {
        Field::Big(x)
    }
}

impl From<&ExactInt> for Field {
    fn from(x: &ExactInt) -> Self {
        Field::Big(x.clone())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

/// A header and rows of equal width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Records {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Field>>,
}

impl Records {
    pub fn new(columns: &[&'static str]) -> Self {
        Records {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Field>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    fn object(&self, row: &[Field]) -> Value {
        let map: Map<String, Value> = self
            .columns
            .iter()
            .zip(row)
            .map(|(k, v)| (k.to_string(), v.json()))
            .collect();
        Value::Object(map)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.rows.iter().map(|r| self.object(r)).collect())
    }

    /// Writes every row; JSON is an array of objects.
    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => write_json(&self.to_json(), out),
        }
    }

    /// Writes a single-row result; JSON is one object instead of an array.
    pub fn write_single(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match (format, self.rows.as_slice()) {
            (Format::Json, [row]) => write_json(&self.object(row), out),
            _ => self.write(format, out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Field::text))?;
        }
        w.flush()
    }
}

pub fn write_json(value: &Value, out: &mut dyn Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}
