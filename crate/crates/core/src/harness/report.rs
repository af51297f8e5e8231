use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::certify::content_digest;
use crate::error::{Error, Result};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub id: String,
    pub kind: String,
    pub params: Value,
    pub vectors: Value,
    /// Certificates backing every numeric claim made about this construction.
    pub certificate_refs: Vec<String>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub metadata: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub id: String,
    pub kind: String,
    pub verdict: String,
    pub witness: Value,
    pub pivot_log: Value,
    pub inputs_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

impl CertificateRecord {
    pub fn witness_digest(&self) -> String {
        content_digest(&(&self.witness, &self.pivot_log))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub toolkit_version: String,
    pub constructions: Vec<ConstructionRecord>,
    pub certificates: Vec<CertificateRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    /// Pretty JSON without the wall-time field; identical configs give
    /// identical bytes.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.wall_time_ms = None;
        serde_json::to_string_pretty(&r).expect("reports serialize")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn certificate(&self, id: &str) -> Option<&CertificateRecord> {
        self.certificates.iter().find(|c| c.id == id)
    }

    pub fn certificates_of(&self, kind: &str) -> impl Iterator<Item = &CertificateRecord> {
        let kind = kind.to_string();
        self.certificates.iter().filter(move |c| c.kind == kind)
    }

    /// One row per certificate: scenario, subset, verdict, witness digest.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["scenario", "subset", "verdict", "witness_digest"])
            .expect("in-memory csv");
        for c in &self.certificates {
            let subset = c
                .subset
                .as_ref()
                .map(|s| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            w.write_record([self.scenario.as_str(), &subset, &c.verdict, &c.witness_digest()])
                .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("unknown format `{other}`; valid: json, csv"))),
        }
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

/// Write the report to `path`, or stdout when `path` is `None`.
pub fn emit_report(report: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = render(report, format);
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
