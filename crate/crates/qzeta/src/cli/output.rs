//! Serialization of check reports and tables.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Config(format!("unknown format '{}' (json, csv)", s))),
        }
    }
}

/// A suite run as written to disk: the settings that determine it, then every report.
#[derive(Debug, Serialize)]
pub struct SuiteReport<'a> {
    pub suite: String,
    pub settings: BTreeMap<String, String>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub reports: &'a [CheckReport],
}

impl<'a> SuiteReport<'a> {
    pub fn new(suite: &str, settings: BTreeMap<String, String>, reports: &'a [CheckReport]) -> Self {
        use crate::report::Status;
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        SuiteReport {
            suite: suite.to_string(),
            settings,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: reports.len() - count(Status::Pass) - count(Status::Fail),
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(format!("csv: {}", e))
}

/// One row per report; parameters and notes are joined with `;`.
pub fn reports_csv(reports: &[CheckReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["identity_id", "source", "regime", "status", "params", "lhs", "rhs", "notes"]).map_err(csv_err)?;
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        let regime = serde_json::to_value(r.regime).expect("enum serializes");
        w.write_record([
            r.identity_id.as_str(),
            r.source.as_str(),
            regime.as_str().unwrap_or_default(),
            &r.status.to_string(),
            &params.join(";"),
            r.lhs.as_deref().unwrap_or(""),
            r.rhs.as_deref().unwrap_or(""),
            &r.notes.join(";"),
        ])
        .map_err(csv_err)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).map_err(|e| Error::Io(e.to_string()))
}

/// Rows of any serializable record type as CSV.
pub fn rows_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).map_err(|e| Error::Io(e.to_string()))
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {}", p.display(), e))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
        }
    }
}
