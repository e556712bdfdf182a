//! Tabular reports and their CSV / JSON renderings.
//!
//! Field order is fixed by construction and floats are printed in their
//! shortest round-trip form, so identical inputs give byte-identical output.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

/// Significant digits that make every `f64` round-trip.
pub const FULL_PRECISION: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Field {
    Int(u64),
    Float(f64),
    Bool(bool),
    /// Rendered as an empty CSV cell or JSON `null`.
    Missing,
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::Int(v)
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Float(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl<T: Into<Field>> From<Option<T>> for Field {
    fn from(v: Option<T>) -> Self {
        v.map_or(Field::Missing, Into::into)
    }
}

/// One row: named fields in output order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    pub fn with(mut self, name: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    pub fn get(&self, name: &str) -> Option<Field> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
    }

    fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.iter().map(|(n, _)| *n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Object,
    Rows,
}

/// Output of one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    records: Vec<Record>,
    shape: Shape,
    /// A verified bound or inequality failed.
    pub failed: bool,
}

impl Report {
    /// A single summary record (a JSON object).
    pub fn single(record: Record, failed: bool) -> Self {
        Report {
            records: vec![record],
            shape: Shape::Object,
            failed,
        }
    }

    /// A table of records (a JSON array).
    pub fn rows(records: Vec<Record>, failed: bool) -> Self {
        Report {
            records,
            shape: Shape::Rows,
            failed,
        }
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }
}

/// Round to `precision` significant digits (no-op at full precision).
pub fn round_sig(v: f64, precision: usize) -> f64 {
    if precision >= FULL_PRECISION || !v.is_finite() || v == 0.0 {
        return v;
    }
    let digits = precision.max(1) - 1;
    format!("{v:.digits$e}").parse().expect("formatted float parses")
}

/// Shortest round-trip text of `v` after rounding to `precision` digits.
pub fn format_float(v: f64, precision: usize) -> String {
    format!("{:?}", round_sig(v, precision))
}

fn csv_cell(field: Field, precision: usize) -> String {
    match field {
        Field::Int(v) => v.to_string(),
        Field::Float(v) => format_float(v, precision),
        Field::Bool(v) => v.to_string(),
        Field::Missing => String::new(),
    }
}

fn json_value(field: Field, precision: usize) -> Value {
    match field {
        Field::Int(v) => Value::from(v),
        Field::Float(v) => Number::from_f64(round_sig(v, precision)).map_or(Value::Null, Value::Number),
        Field::Bool(v) => Value::Bool(v),
        Field::Missing => Value::Null,
    }
}

pub fn write_csv<W: Write>(report: &Report, precision: usize, out: W) -> io::Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if let Some(first) = report.records.first() {
        writer.write_record(first.names())?;
    }
    for record in &report.records {
        writer.write_record(record.0.iter().map(|(_, f)| csv_cell(*f, precision)))?;
    }
    writer.flush()
}

pub fn write_json<W: Write>(report: &Report, precision: usize, mut out: W) -> io::Result<()> {
    let objects: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            let map: Map<String, Value> =
                r.0.iter()
                    .map(|(n, f)| (n.to_string(), json_value(*f, precision)))
                    .collect();
            Value::Object(map)
        })
        .collect();
    let value = match report.shape {
        Shape::Object => objects.into_iter().next().unwrap_or(Value::Null),
        Shape::Rows => Value::Array(objects),
    };
    serde_json::to_writer_pretty(&mut out, &value)?;
    out.write_all(b"\n")
}
