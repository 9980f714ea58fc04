//! The machine-readable report schema.
//!
//! The CSV header is fixed; JSON mirrors the same fields row by row. Absent
//! values (a bound that does not apply, the diameter of a disconnected
//! graph) are empty CSV cells and JSON nulls. Floats are rendered in Rust's
//! shortest round-trip form, which is a pure function of the bits, so equal
//! configurations produce byte-identical reports.

use serde::Serialize;

pub const CSV_HEADER: &str = "family,n,m,delta,diameter,lambda1_lo,lambda1_hi,gap_lo,gap_hi,bound_main,bound_cgn,c_lo,c_hi,verdict_main,verdict_extra";

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ReportRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub diameter: Option<usize>,
    pub lambda1_lo: Option<f64>,
    pub lambda1_hi: Option<f64>,
    pub gap_lo: Option<f64>,
    pub gap_hi: Option<f64>,
    pub bound_main: Option<f64>,
    pub bound_cgn: Option<f64>,
    pub c_lo: Option<f64>,
    pub c_hi: Option<f64>,
    pub verdict_main: String,
    pub verdict_extra: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format {other:?}, expected csv or json")),
        }
    }
}

fn float_cell(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn usize_cell(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.family,
            r.n,
            r.m,
            r.delta,
            usize_cell(r.diameter),
            float_cell(r.lambda1_lo),
            float_cell(r.lambda1_hi),
            float_cell(r.gap_lo),
            float_cell(r.gap_hi),
            float_cell(r.bound_main),
            float_cell(r.bound_cgn),
            float_cell(r.c_lo),
            float_cell(r.c_hi),
            r.verdict_main,
            r.verdict_extra,
        ));
    }
    out
}

pub fn to_json(rows: &[ReportRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("report rows serialize");
    out.push('\n');
    out
}

pub fn render(rows: &[ReportRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => to_csv(rows),
        ReportFormat::Json => to_json(rows),
    }
}
