//! Flat verdict records and the CSV / JSON sweep formats.

use std::io::Write;

use gvm_core::harness::{SweepReport, SweepSummary};
use gvm_core::Verdict;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: [&str; 11] =
    ["type", "n", "p", "q", "z1", "z2", "gk", "dim_u", "reducible", "criterion", "agree"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub z1: String,
    pub z2: String,
    pub gk: usize,
    pub dim_u: usize,
    pub reducible: bool,
    pub criterion: Option<bool>,
    pub agree: Option<bool>,
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        VerdictRecord {
            kind: v.setup.kind().to_string(),
            n: v.setup.n(),
            p: v.setup.p(),
            q: v.setup.q(),
            z1: v.z1.to_string(),
            z2: v.z2.to_string(),
            gk: v.gk,
            dim_u: v.dim_u,
            reducible: v.reducible,
            criterion: v.criterion,
            agree: v.agree,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub points: usize,
    pub reducible: usize,
    pub irreducible: usize,
    pub mismatches: usize,
    pub errors: usize,
}

impl From<&SweepSummary> for SummaryRecord {
    fn from(s: &SweepSummary) -> Self {
        SummaryRecord {
            points: s.points,
            reducible: s.reducible,
            irreducible: s.irreducible,
            mismatches: s.mismatches,
            errors: s.errors,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub index: usize,
    pub z1: String,
    pub z2: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub rows: Vec<VerdictRecord>,
    pub summary: SummaryRecord,
    pub errors: Vec<ErrorRecord>,
}

impl From<&SweepReport> for SweepDocument {
    fn from(r: &SweepReport) -> Self {
        SweepDocument {
            rows: r.rows.iter().map(VerdictRecord::from).collect(),
            summary: SummaryRecord::from(&r.summary),
            errors: r
                .errors
                .iter()
                .map(|e| ErrorRecord {
                    index: e.index,
                    z1: e.z1.to_string(),
                    z2: e.z2.to_string(),
                    error: e.error.to_string(),
                })
                .collect(),
        }
    }
}

/// One header line plus one row per verdict; absent criterion fields are
/// left empty.
pub fn write_csv<W: Write>(report: &SweepReport, out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for v in &report.rows {
        w.serialize(VerdictRecord::from(v))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(report: &SweepReport, out: W) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(out, &SweepDocument::from(report))
}

pub fn csv_string(report: &SweepReport) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn json_string(report: &SweepReport) -> String {
    let mut buf = Vec::new();
    write_json(report, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("json output is utf-8")
}
