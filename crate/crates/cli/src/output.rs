//! Tables and their CSV / JSON encodings.

use std::fs::File;
use std::io::{self, Write};

use geronimus_core::LogScaled;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};
use crate::error::CliResult;

pub const SCHEMA_VERSION: u32 = 1;

/// Floats are withheld (null) beyond this natural-log magnitude.
pub const MAX_FLOAT_LOGMAG: f64 = 700.0;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(Option<f64>),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Float(Some(x)) if x.is_finite() => json!(x),
            Cell::Float(_) => Value::Null,
            Cell::Bool(b) => json!(b),
            Cell::Text(s) => json!(s),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(Some(x)) if x.is_finite() => fmt_float(*x),
            Cell::Float(_) => String::new(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

// Shortest digits that parse back to the same bits; exponent form off the
// comfortable range, since plain `{}` would print hundreds of zeros.
fn fmt_float(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn float(x: f64) -> Cell {
    Cell::Float(Some(x))
}

/// `(sign, logmag, float-or-null)` for an overflow-free value.
pub fn scaled_cells(v: LogScaled) -> [Cell; 3] {
    if v.is_zero() {
        return [Cell::Int(0), Cell::Float(None), float(0.0)];
    }
    let l = v.logmag();
    let f = if l.abs() > MAX_FLOAT_LOGMAG { None } else { Some(v.to_f64()) };
    [Cell::Int(v.sign() as i64), float(l), Cell::Float(f)]
}

/// Column names for [`scaled_cells`] with the given prefix.
pub fn scaled_columns(prefix: &str) -> [String; 3] {
    [format!("{prefix}_sign"), format!("{prefix}_logmag"), prefix.to_string()]
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Map<String, Value>,
}

impl Table {
    pub fn new(columns: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, out: impl Write) -> CliResult<()> {
        let mut w = csv::WriterBuilder::new().from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv))?;
        }
        let mut out = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        for (k, v) in &self.summary {
            writeln!(out, "# {k}: {v}")?;
        }
        Ok(())
    }

    pub fn to_json(&self, config: &impl Serialize) -> CliResult<Value> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(r.iter().map(Cell::to_json)).collect();
                Value::Object(obj)
            })
            .collect();
        Ok(json!({
            "schema": SCHEMA_VERSION,
            "config": serde_json::to_value(config)?,
            "rows": rows,
            "summary": Value::Object(self.summary.clone()),
        }))
    }

    pub fn write_json(&self, config: &impl Serialize, mut out: impl Write) -> CliResult<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json(config)?)?;
        writeln!(out)?;
        Ok(())
    }

    /// Writes to `--out` or standard output in the configured format.
    pub fn emit(&self, config: &RunConfig) -> CliResult<()> {
        let sink: Box<dyn Write> = match &config.out {
            Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
            None => Box::new(io::stdout().lock()),
        };
        match config.format {
            Format::Csv => self.write_csv(sink),
            Format::Json => self.write_json(config, sink),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_values_have_no_float() {
        let big = LogScaled::exp_of(800.0);
        let cells = scaled_cells(big);
        assert_eq!(cells[0], Cell::Int(1));
        assert_eq!(cells[2], Cell::Float(None));
        let small = scaled_cells(LogScaled::from_f64(-2.5));
        assert_eq!(small[0], Cell::Int(-1));
        assert_eq!(small[2], float(-2.5));
        assert_eq!(scaled_cells(LogScaled::ZERO)[0], Cell::Int(0));
    }

    #[test]
    fn floats_round_trip() {
        for &x in &[0.1, -2.5e-300, 1.7976931348623157e308, 123456.789, 5e-324, -0.0] {
            let s = fmt_float(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new(["n", "v", "ok"]);
        t.push(vec![Cell::Int(3), float(0.1), Cell::Bool(true)]);
        t.push(vec![Cell::Int(4), Cell::Float(None), Cell::Bool(false)]);
        t.summary.insert("note".into(), json!("x"));
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,v,ok\n3,0.1,true\n4,,false\n# note: \"x\"\n");
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new(["n"]);
        t.push(vec![Cell::Int(1)]);
        let v = t.to_json(&json!({"a": 1})).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["rows"][0]["n"], 1);
        assert!(v["summary"].is_object());
    }
}
