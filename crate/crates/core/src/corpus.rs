//! CSV corpus ingestion: `name,pd[,signature,determinant,alternating]`.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternating::AlternationStatus;
use crate::diagram::parse_pd;
use crate::error::{Error, Result};
use crate::invariants::InvariantReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub name: String,
    pub pd: String,
    #[serde(default)]
    pub signature: Option<i64>,
    #[serde(default)]
    pub determinant: Option<u64>,
    #[serde(default)]
    pub alternating: Option<bool>,
}

/// A row that could not be read, with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub line: u64,
    pub reason: String,
}

/// Reads records, skipping malformed rows. An empty input yields no records.
pub fn read_records<R: Read>(input: R) -> Result<(Vec<CorpusRecord>, Vec<Skipped>)> {
    let mut rdr = csv::ReaderBuilder::new().flexible(true).trim(csv::Trim::All).from_reader(input);
    let headers = rdr.headers().map_err(|e| Error::Input(e.to_string()))?.clone();
    if headers.is_empty() {
        return Ok((vec![], vec![]));
    }
    for required in ["name", "pd"] {
        if !headers.iter().any(|h| h == required) {
            return Err(Error::Input(format!("CSV header lacks `{required}`")));
        }
    }
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for row in rdr.records() {
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                skipped.push(Skipped { line, reason: e.to_string() });
                continue;
            }
        };
        let line = row.position().map_or(0, |p| p.line());
        match row.deserialize::<CorpusRecord>(Some(&headers)) {
            Ok(r) => records.push(r),
            Err(e) => skipped.push(Skipped { line, reason: e.to_string() }),
        }
    }
    Ok((records, skipped))
}

/// One analyzed corpus row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLine {
    pub name: String,
    pub report: InvariantReport,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub rows: usize,
    pub analyzed: usize,
    pub skipped: usize,
    pub mismatches: usize,
}

/// Analyzes records in parallel; results keep input order. Rows whose PD
/// does not parse (or whose invariants cannot be computed) are returned as
/// skips.
pub fn analyze_records(records: &[CorpusRecord]) -> Vec<std::result::Result<CorpusLine, (String, Error)>> {
    records
        .par_iter()
        .map(|r| {
            let report = parse_pd(&r.pd)
                .and_then(|m| InvariantReport::compute(&m, false))
                .map_err(|e| (r.name.clone(), e))?;
            let mismatches = mismatches(r, &report);
            Ok(CorpusLine { name: r.name.clone(), report, mismatches })
        })
        .collect()
}

fn mismatches(r: &CorpusRecord, report: &InvariantReport) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(s) = r.signature {
        if report.knot_signature != Some(s) {
            out.push(format!("signature: expected {s}, got {:?}", report.knot_signature));
        }
    }
    if let Some(d) = r.determinant {
        if report.determinant != Some(d) {
            out.push(format!("determinant: expected {d}, got {:?}", report.determinant));
        }
    }
    if let Some(a) = r.alternating {
        let got = report.alternating == AlternationStatus::Alternating;
        if got != a {
            out.push(format!("alternating: expected {a}, got {got}"));
        }
    }
    out
}

/// Runs a corpus end to end, writing one JSON line per analyzed row. Skip
/// messages go to `warn`.
pub fn run_corpus<R: Read, W: Write>(
    input: R,
    out: &mut W,
    mut warn: impl FnMut(&str),
) -> Result<CorpusSummary> {
    let (records, skipped) = read_records(input)?;
    let mut summary = CorpusSummary { rows: records.len() + skipped.len(), skipped: skipped.len(), ..Default::default() };
    for s in &skipped {
        warn(&format!("line {}: skipped: {}", s.line, s.reason));
    }
    for line in analyze_records(&records) {
        match line {
            Ok(l) => {
                summary.analyzed += 1;
                if !l.mismatches.is_empty() {
                    summary.mismatches += 1;
                    warn(&format!("{}: {}", l.name, l.mismatches.join("; ")));
                }
                let text = serde_json::to_string(&l).expect("corpus lines serialize");
                writeln!(out, "{text}").map_err(|e| Error::Json(e.to_string()))?;
            }
            Err((name, e)) => {
                summary.skipped += 1;
                warn(&format!("{name}: skipped: {e}"));
            }
        }
    }
    Ok(summary)
}
