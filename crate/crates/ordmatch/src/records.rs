//! Reproduction records and their JSON / CSV export.
//!
//! CSV columns: `id, passed, bound, params, measured, wall_clock_ms`, where
//! `params` and `measured` are `key=value` pairs joined by `;`.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use crate::formats::{to_json, write_atomic};

pub const CSV_HEADER: [&str; 6] = ["id", "passed", "bound", "params", "measured", "wall_clock_ms"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReproductionRecord {
    pub id: String,
    /// Everything needed to rerun the experiment, including any seed.
    pub params: BTreeMap<String, String>,
    /// Exact values as `num/den` (or `inf`).
    pub measured: BTreeMap<String, String>,
    pub bound: String,
    pub passed: bool,
    pub wall_clock_ms: u64,
}

fn join(m: &BTreeMap<String, String>) -> String {
    m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn to_csv(records: &[ReproductionRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.id.as_str(),
            if r.passed { "true" } else { "false" },
            r.bound.as_str(),
            &join(&r.params),
            &join(&r.measured),
            &r.wall_clock_ms.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn export(records: &[ReproductionRecord], format: Format, path: &Path) -> Result<()> {
    let text = match format {
        Format::Json => to_json(&records)?,
        Format::Csv => to_csv(records)?,
    };
    write_atomic(path, text.as_bytes())
}
