//! Output records and the single emitter that writes them.
//!
//! Every command emits records of one kind. Exact values are written as
//! `num/den` strings in JSON and as `X_num,X_den` column pairs in CSV; with
//! `--approx` each exact field `X` also gets a display-only `X_approx`.

use std::io::{self, Write};

use clap::ValueEnum;
use dedekind_core::Rational;
use serde_json::{Map, Value as Json};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Sum,
    ScanRow,
    Candidate,
    ReportRow,
    Bound,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Sum => "sum",
            Kind::ScanRow => "scan_row",
            Kind::Candidate => "candidate",
            Kind::ReportRow => "report_row",
            Kind::Bound => "bound",
        }
    }

    /// Column layout: `(name, exact)`. Exact columns expand to `_num`/`_den`.
    pub fn schema(self) -> &'static [(&'static str, bool)] {
        match self {
            Kind::Sum => &[("n", false), ("m", false), ("method", false), ("S", true), ("match", false)],
            Kind::ScanRow => &[("n", false), ("m", false), ("S", true)],
            Kind::Candidate => &[("k", false), ("n", false), ("m", false), ("origins", false), ("S", true)],
            Kind::ReportRow => &[
                ("theorem", false),
                ("status", false),
                ("n_from", false),
                ("n_to", false),
                ("checked_count", false),
                ("violation_count", false),
                ("n", false),
                ("m", false),
                ("S", true),
                ("reference", true),
            ],
            Kind::Bound => &[("k", false), ("n", false), ("name", false), ("value", true)],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    UInt(u64),
    Exact(Rational),
    Bool(bool),
    Text(String),
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::UInt(v)
    }
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::Exact(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub kind: Kind,
    fields: Vec<(&'static str, Value)>,
}

impl OutputRecord {
    pub fn new(kind: Kind) -> Self {
        Self {
            kind,
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        debug_assert!(self.kind.schema().iter().any(|(name, _)| *name == key), "{key}");
        self.fields.push((key, value.into()));
        self
    }

    fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    fn to_json(&self, approx: bool) -> Json {
        let mut payload = Map::new();
        for (name, _) in self.kind.schema() {
            let Some(value) = self.get(name) else { continue };
            match value {
                Value::UInt(v) => {
                    payload.insert(name.to_string(), Json::from(*v));
                }
                Value::Bool(v) => {
                    payload.insert(name.to_string(), Json::from(*v));
                }
                Value::Text(v) => {
                    payload.insert(name.to_string(), Json::from(v.clone()));
                }
                Value::Exact(v) => {
                    payload.insert(name.to_string(), Json::from(v.to_string()));
                    if approx {
                        payload.insert(format!("{name}_approx"), Json::from(v.to_f64_approx()));
                    }
                }
            }
        }
        let mut obj = Map::new();
        obj.insert("kind".into(), Json::from(self.kind.name()));
        obj.insert("payload".into(), Json::Object(payload));
        Json::Object(obj)
    }

    fn to_csv_row(&self, approx: bool) -> Vec<String> {
        let mut row = Vec::new();
        for (name, exact) in self.kind.schema() {
            let value = self.get(name);
            if *exact {
                match value {
                    Some(Value::Exact(v)) => {
                        row.push(v.numer().to_string());
                        row.push(v.denom().to_string());
                        if approx {
                            row.push(v.to_f64_approx().to_string());
                        }
                    }
                    _ => {
                        row.extend(["".to_string(), "".to_string()]);
                        if approx {
                            row.push(String::new());
                        }
                    }
                }
            } else {
                row.push(match value {
                    None => String::new(),
                    Some(Value::UInt(v)) => v.to_string(),
                    Some(Value::Bool(v)) => v.to_string(),
                    Some(Value::Text(v)) => v.clone(),
                    Some(Value::Exact(v)) => v.to_string(),
                });
            }
        }
        row
    }
}

pub fn csv_header(kind: Kind, approx: bool) -> Vec<String> {
    let mut header = Vec::new();
    for (name, exact) in kind.schema() {
        if *exact {
            header.push(format!("{name}_num"));
            header.push(format!("{name}_den"));
            if approx {
                header.push(format!("{name}_approx"));
            }
        } else {
            header.push(name.to_string());
        }
    }
    header
}

/// Writes records in the order they are handed over. CSV output gets one
/// header line, taken from the first record's kind.
pub struct Emitter<W: Write> {
    format: Format,
    approx: bool,
    out: W,
    header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, approx: bool, out: W) -> Self {
        Self {
            format,
            approx,
            out,
            header_written: false,
        }
    }

    pub fn emit(&mut self, record: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", record.to_json(self.approx)),
            Format::Csv => {
                if !self.header_written {
                    self.write_csv(&csv_header(record.kind, self.approx))?;
                    self.header_written = true;
                }
                self.write_csv(&record.to_csv_row(self.approx))
            }
        }
    }

    fn write_csv(&mut self, row: &[String]) -> io::Result<()> {
        let mut writer = csv::WriterBuilder::new().from_writer(&mut self.out);
        writer.write_record(row).map_err(io::Error::other)?;
        writer.flush()
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}
