//! Row types and writers for the command-line output.
//!
//! Every JSON object is emitted as one line (NDJSON). Struct fields are
//! declared in alphabetical order so that the serialized key order matches
//! the order produced by `serde_json::Value` (which sorts keys); a
//! serialize → parse → serialize round trip is therefore byte-identical.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use biperiodic::report::format_rational;
use biperiodic::{IdentityReport, Params};
use serde::Serialize;

/// Exact parameter quadruple, componentwise as canonical fraction strings.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ParamsRepr {
    pub a: String,
    pub b: String,
    pub w0: String,
    pub w1: String,
}

impl ParamsRepr {
    pub fn from_params(params: &Params) -> Self {
        ParamsRepr {
            a: format_rational(params.a()),
            b: format_rational(params.b()),
            w0: format_rational(params.w0()),
            w1: format_rational(params.w1()),
        }
    }

    /// Compact single-cell rendering used by the CSV writer.
    pub fn cell(&self) -> String {
        format!("a={};b={};w0={};w1={}", self.a, self.b, self.w0, self.w1)
    }
}

/// One verification result row.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub equal: bool,
    pub identity: String,
    pub indices: BTreeMap<String, i64>,
    pub lhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsRepr>,
    pub rhs: String,
}

impl ReportRow {
    pub fn from_report(report: &IdentityReport) -> Self {
        ReportRow {
            equal: report.equal(),
            identity: report.identity().to_string(),
            indices: report
                .indices()
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            lhs: report.lhs().to_string(),
            note: report.note().map(str::to_string),
            params: Some(ParamsRepr::from_params(report.params())),
            rhs: report.rhs().to_string(),
        }
    }

    /// Row for a structural check that is not tied to a parameter choice.
    pub fn algebra(identity: &str, lhs: String, rhs: String, note: Option<String>) -> Self {
        ReportRow {
            equal: lhs == rhs,
            identity: identity.to_string(),
            indices: BTreeMap::new(),
            lhs,
            note,
            params: None,
            rhs,
        }
    }

    fn indices_cell(&self) -> String {
        self.indices
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// One row of the term table.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: i64,
    pub octonion: Vec<String>,
    pub quaternion: Vec<String>,
    pub w: String,
}

/// One degree of a generating-function expansion, compared with the term
/// the closed form says it should equal.
#[derive(Debug, Clone, Serialize)]
pub struct GenfuncRow {
    pub coefficient: Vec<String>,
    pub degree: usize,
    pub matches: bool,
    pub term: Vec<String>,
}

/// One norm evaluation, recurrence route versus closed form.
#[derive(Debug, Clone, Serialize)]
pub struct NormRow {
    pub closed_form: String,
    pub equal: bool,
    pub n: i64,
    pub norm: String,
}

/// First line of a verification run: what is about to be checked.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyHeader {
    pub grid: Vec<ParamsRepr>,
    pub ranges: BTreeMap<String, String>,
    pub workers: usize,
}

/// Last line of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub checked: usize,
    pub exploratory: usize,
    pub failing: usize,
    pub status: String,
}

/// Output serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse_name(name: &str) -> Option<OutputFormat> {
        match name {
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            _ => None,
        }
    }
}

/// Stdout or a file, chosen by `--output`.
pub fn open_sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    })
}

pub fn write_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    let line = serde_json::to_string(value).map_err(io::Error::other)?;
    writeln!(out, "{line}")
}

fn join_bracketed(parts: &[String]) -> String {
    format!("[{}]", parts.join(", "))
}

/// Writes table rows in the requested format.
pub fn write_table_rows(
    out: &mut dyn Write,
    format: OutputFormat,
    rows: &[TableRow],
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            for row in rows {
                write_json_line(out, row)?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["n", "w", "quaternion", "octonion"])?;
            for row in rows {
                writer.write_record([
                    row.n.to_string(),
                    row.w.clone(),
                    join_bracketed(&row.quaternion),
                    join_bracketed(&row.octonion),
                ])?;
            }
            writer.flush()
        }
    }
}

/// Writes generating-function rows in the requested format.
pub fn write_genfunc_rows(
    out: &mut dyn Write,
    format: OutputFormat,
    rows: &[GenfuncRow],
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            for row in rows {
                write_json_line(out, row)?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["degree", "coefficient", "term", "matches"])?;
            for row in rows {
                writer.write_record([
                    row.degree.to_string(),
                    join_bracketed(&row.coefficient),
                    join_bracketed(&row.term),
                    row.matches.to_string(),
                ])?;
            }
            writer.flush()
        }
    }
}

/// Writes norm rows in the requested format.
pub fn write_norm_rows(
    out: &mut dyn Write,
    format: OutputFormat,
    rows: &[NormRow],
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            for row in rows {
                write_json_line(out, row)?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["n", "norm", "closed_form", "equal"])?;
            for row in rows {
                writer.write_record([
                    row.n.to_string(),
                    row.norm.clone(),
                    row.closed_form.clone(),
                    row.equal.to_string(),
                ])?;
            }
            writer.flush()
        }
    }
}

/// Writes a full verification run. In JSON mode the header object comes
/// first and the summary object last, all on the main sink. In CSV mode
/// the sink carries only the tabular rows; header and summary go to
/// stderr as JSON so the CSV stays machine-readable.
pub fn write_verify_output(
    out: &mut dyn Write,
    format: OutputFormat,
    header: &VerifyHeader,
    rows: &[ReportRow],
    summary: &VerifySummary,
) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            write_json_line(out, header)?;
            for row in rows {
                write_json_line(out, row)?;
            }
            write_json_line(out, summary)
        }
        OutputFormat::Csv => {
            let mut stderr = io::stderr().lock();
            write_json_line(&mut stderr, header)?;
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(["identity", "params", "indices", "equal"])?;
            for row in rows {
                writer.write_record([
                    row.identity.clone(),
                    row.params
                        .as_ref()
                        .map(ParamsRepr::cell)
                        .unwrap_or_else(|| "-".to_string()),
                    row.indices_cell(),
                    row.equal.to_string(),
                ])?;
            }
            writer.flush()?;
            write_json_line(&mut stderr, summary)
        }
    }
}
