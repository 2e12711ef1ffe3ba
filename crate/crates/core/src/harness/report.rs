//! Report records and their JSON and CSV renderings.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), which
//! round-trips every binary64 value and keeps output byte-stable.
//! Non-finite values, which JSON cannot carry as numbers, are written as
//! the strings `"inf"`, `"-inf"` and `"nan"`.

use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::grid::{GridSpec, Spacing};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub grid: GridSpec,
    pub min_margin: f64,
    pub argmin_x: f64,
    pub verdict: Verdict,
    pub precision_digits: u32,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Usage(format!(
                "unknown format {other:?}; expected json or csv"
            ))),
        }
    }
}

pub const CSV_HEADER: [&str; 10] = [
    "claim_id",
    "lo",
    "hi",
    "points",
    "spacing",
    "min_margin",
    "argmin_x",
    "verdict",
    "precision_digits",
    "runtime_ms",
];

const JSON_KEYS: [&str; 7] = [
    "claim_id",
    "grid",
    "min_margin",
    "argmin_x",
    "verdict",
    "precision_digits",
    "runtime_ms",
];
const GRID_KEYS: [&str; 4] = ["lo", "hi", "points", "spacing"];

/// Textual form of a float as used in both formats.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v:.16e}")
    }
}

fn parse_float(s: &str) -> Result<f64> {
    match s {
        "nan" => Ok(f64::NAN),
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => s
            .parse::<f64>()
            .map_err(|_| Error::Format(format!("bad float {s:?}"))),
    }
}

fn json_float(v: f64) -> String {
    if v.is_finite() {
        format_float(v)
    } else {
        format!("\"{}\"", format_float(v))
    }
}

fn json_string(s: &str) -> String {
    Value::String(s.to_owned()).to_string()
}

/// JSON array of reports, keys in schema order, one object per line.
pub fn to_json(reports: &[VerificationReport]) -> String {
    if reports.is_empty() {
        return "[]\n".into();
    }
    let rows: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "  {{\"claim_id\":{},\"grid\":{{\"lo\":{},\"hi\":{},\"points\":{},\"spacing\":{}}},\"min_margin\":{},\"argmin_x\":{},\"verdict\":{},\"precision_digits\":{},\"runtime_ms\":{}}}",
                json_string(&r.claim_id),
                json_float(r.grid.lo),
                json_float(r.grid.hi),
                r.grid.points,
                json_string(r.grid.spacing.as_str()),
                json_float(r.min_margin),
                json_float(r.argmin_x),
                json_string(r.verdict.as_str()),
                r.precision_digits,
                r.runtime_ms,
            )
        })
        .collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}

fn exact_keys(obj: &Map<String, Value>, keys: &[&str], what: &str) -> Result<()> {
    if obj.len() != keys.len() || keys.iter().any(|k| !obj.contains_key(*k)) {
        let got: Vec<&String> = obj.keys().collect();
        return Err(Error::Format(format!(
            "{what} must have keys {keys:?}, got {got:?}"
        )));
    }
    Ok(())
}

fn value_float(v: &Value, key: &str) -> Result<f64> {
    match v {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| Error::Format(format!("{key}: not representable as f64"))),
        Value::String(s) => parse_float(s),
        _ => Err(Error::Format(format!("{key}: expected a number"))),
    }
}

fn value_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::Format(format!("{key}: expected a string")))
}

fn value_u64(v: &Value, key: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::Format(format!("{key}: expected a non-negative integer")))
}

fn grid_from_parts(lo: f64, hi: f64, points: u64, spacing: &str) -> Result<GridSpec> {
    let spacing: Spacing = spacing
        .parse()
        .map_err(|_| Error::Format(format!("bad spacing {spacing:?}")))?;
    let points = usize::try_from(points).map_err(|_| Error::Format("points overflow".into()))?;
    GridSpec::new(lo, hi, points, spacing).map_err(|e| Error::Format(e.to_string()))
}

fn verdict_from(s: &str) -> Result<Verdict> {
    s.parse().map_err(Error::Format)
}

pub fn from_json(text: &str) -> Result<Vec<VerificationReport>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Format("top level must be an array".into()))?;
    arr.iter()
        .map(|item| {
            let o = item
                .as_object()
                .ok_or_else(|| Error::Format("report must be an object".into()))?;
            exact_keys(o, &JSON_KEYS, "report")?;
            let g = o["grid"]
                .as_object()
                .ok_or_else(|| Error::Format("grid must be an object".into()))?;
            exact_keys(g, &GRID_KEYS, "grid")?;
            let grid = grid_from_parts(
                value_float(&g["lo"], "lo")?,
                value_float(&g["hi"], "hi")?,
                value_u64(&g["points"], "points")?,
                value_str(&g["spacing"], "spacing")?,
            )?;
            Ok(VerificationReport {
                claim_id: value_str(&o["claim_id"], "claim_id")?.to_owned(),
                grid,
                min_margin: value_float(&o["min_margin"], "min_margin")?,
                argmin_x: value_float(&o["argmin_x"], "argmin_x")?,
                verdict: verdict_from(value_str(&o["verdict"], "verdict")?)?,
                precision_digits: u32::try_from(value_u64(
                    &o["precision_digits"],
                    "precision_digits",
                )?)
                .map_err(|_| Error::Format("precision_digits overflow".into()))?,
                runtime_ms: value_u64(&o["runtime_ms"], "runtime_ms")?,
            })
        })
        .collect()
}

fn csv_err(e: csv::Error) -> Error {
    Error::Format(e.to_string())
}

/// RFC-4180 CSV with [`CSV_HEADER`].
pub fn to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in reports {
        w.write_record([
            r.claim_id.clone(),
            format_float(r.grid.lo),
            format_float(r.grid.hi),
            r.grid.points.to_string(),
            r.grid.spacing.as_str().to_owned(),
            format_float(r.min_margin),
            format_float(r.argmin_x),
            r.verdict.as_str().to_owned(),
            r.precision_digits.to_string(),
            r.runtime_ms.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

fn field<T: std::str::FromStr>(s: &str, name: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Format(format!("{name}: bad value {s:?}")))
}

pub fn from_csv(text: &str) -> Result<Vec<VerificationReport>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(csv_err)?;
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Format(format!("unexpected CSV header {header:?}")));
    }
    r.records()
        .map(|rec| {
            let rec = rec.map_err(csv_err)?;
            let grid = grid_from_parts(
                parse_float(&rec[1])?,
                parse_float(&rec[2])?,
                field(&rec[3], "points")?,
                &rec[4],
            )?;
            Ok(VerificationReport {
                claim_id: rec[0].to_owned(),
                grid,
                min_margin: parse_float(&rec[5])?,
                argmin_x: parse_float(&rec[6])?,
                verdict: verdict_from(&rec[7])?,
                precision_digits: field(&rec[8], "precision_digits")?,
                runtime_ms: field(&rec[9], "runtime_ms")?,
            })
        })
        .collect()
}

pub fn render(reports: &[VerificationReport], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(to_json(reports)),
        ReportFormat::Csv => to_csv(reports),
    }
}

pub fn parse(text: &str, format: ReportFormat) -> Result<Vec<VerificationReport>> {
    match format {
        ReportFormat::Json => from_json(text),
        ReportFormat::Csv => from_csv(text),
    }
}

/// Writes the rendered reports to `path`.
pub fn emit_report(
    reports: &[VerificationReport],
    format: ReportFormat,
    path: &Path,
) -> Result<()> {
    let text = render(reports, format)?;
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
