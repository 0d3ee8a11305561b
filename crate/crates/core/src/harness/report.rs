//! JSON and CSV serialization of reports.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use super::EvalReport;
use crate::error::{Error, Result};
use crate::specfun::RealScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::Usage(format!("unknown format `{s}`"))),
        }
    }
}

pub const COLUMNS: [&str; 14] = [
    "family",
    "variant",
    "p",
    "q",
    "n",
    "a",
    "b",
    "closed_form",
    "corollary",
    "oracle",
    "abs_err",
    "rel_err",
    "status",
    "wall_time_ms",
];

/// 17 significant digits.
fn digits(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> Option<String> {
    v.filter(|x| x.is_finite()).map(digits)
}

fn cells(r: &EvalReport) -> [Option<String>; 14] {
    let val = |x: Option<RealScalar>| opt(x.map(|s| s.value));
    [
        Some(r.family.clone()),
        Some(r.variant.clone()),
        Some(r.p.to_string()),
        Some(r.q.to_string()),
        Some(r.n.to_string()),
        Some(r.a.to_string()),
        Some(r.b.to_string()),
        val(r.closed_form),
        val(r.corollary),
        val(r.oracle),
        opt(r.abs_err),
        opt(r.rel_err),
        Some(r.status.as_str().to_string()),
        Some(r.wall_time_ms.to_string()),
    ]
}

fn json_value(r: &EvalReport) -> Value {
    let mut m = Map::new();
    for (i, (k, v)) in COLUMNS.iter().zip(cells(r)).enumerate() {
        let v = match v {
            None => Value::Null,
            Some(s) if i < 2 || k == &"status" => Value::String(s),
            Some(s) => Value::Number(Number::from_str(&s).expect("numeric cell")),
        };
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

pub fn render_report(reports: &[EvalReport], format: ReportFormat) -> Result<Vec<u8>> {
    if reports.is_empty() {
        return Err(Error::Usage("no reports to emit".into()));
    }
    match format {
        ReportFormat::Json => {
            let arr = Value::Array(reports.iter().map(json_value).collect());
            let mut out = serde_json::to_vec_pretty(&arr)?;
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(COLUMNS)?;
            for r in reports {
                w.write_record(cells(r).map(|c| c.unwrap_or_default()))?;
            }
            w.into_inner().map_err(|e| Error::Io(e.into_error()))
        }
    }
}

/// Write to `dest`, or standard output when `None`.
pub fn emit_report(reports: &[EvalReport], format: ReportFormat, dest: Option<&Path>) -> Result<()> {
    let bytes = render_report(reports, format)?;
    match dest {
        Some(path) => File::create(path)?.write_all(&bytes)?,
        None => io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}
