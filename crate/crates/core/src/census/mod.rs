//! Classify every fibred knot of a knot table.
//!
//! Records come from a delimited file whose column names and fibredness
//! values are configurable ([`CsvSchema`]). Rows that cannot be read are
//! reported and skipped. [`run_census`] is deterministic and independent of
//! record order.
//!
//! # JSON report
//!
//! ```text
//! {
//!   "total": 19, "fibred": 19,
//!   "bi_orderable": ["4_1", ...], "not_bi_orderable": [...], "unknown": [...],
//!   "per_knot": { "4_1": { "verdict": "BiOrderable", "rule": "all-roots-real-positive",
//!                          "positive_roots_distinct": 2, "positive_roots_with_mult": 2,
//!                          "degree": 2, "alexander": "1-3t+t^2" }, ... },
//!   "diagnostics": [{ "name": ..., "message": ... }]
//! }
//! ```
//!
//! Name lists and `per_knot` keys are in table order (crossings, then
//! alternating before non-alternating, then index).

mod load;
mod names;
pub mod reference;

pub use load::{load_csv, load_reader, CsvSchema, KnotRecord, LoadedCsv, SkipReason, SkippedRow};
pub use names::{canonical_name, compare_names, display_name};

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::orderability::{classify_fibred_knot, Classification, Verdict};
use crate::poly::LaurentPolynomial;
use crate::roots::all_roots_real_positive;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("missing {role} column {column:?}")]
    MissingColumn { role: &'static str, column: String },
    #[error("malformed CSV: {0}")]
    Csv(String),
    #[error("schema config line {line}: {message}")]
    BadSchema { line: usize, message: String },
}

impl CensusError {
    fn io(path: &Path, e: std::io::Error) -> Self {
        CensusError::Io { path: path.to_path_buf(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotEntry {
    #[serde(skip)]
    pub name: String,
    #[serde(flatten)]
    pub classification: Classification,
    /// Normalized representative.
    #[serde(serialize_with = "ser_display")]
    pub alexander: LaurentPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub name: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub total: usize,
    pub fibred: usize,
    pub bi_orderable: Vec<String>,
    pub not_bi_orderable: Vec<String>,
    /// Fibred knots only.
    pub unknown: Vec<String>,
    #[serde(serialize_with = "ser_entries")]
    pub per_knot: Vec<KnotEntry>,
    pub diagnostics: Vec<Diagnostic>,
}

fn ser_display<S: Serializer>(p: &LaurentPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn ser_entries<S: Serializer>(entries: &[KnotEntry], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(entries.len()))?;
    for e in entries {
        map.serialize_entry(&e.name, e)?;
    }
    map.end()
}

impl CensusReport {
    pub fn entry(&self, name: &str) -> Option<&KnotEntry> {
        self.per_knot.iter().find(|e| e.name == name)
    }

    /// Names in the bi-orderable list whose polynomial fails an independent
    /// all-roots-real-positive check (the unknot excepted). Always empty for
    /// a correct report.
    pub fn recheck(&self) -> Vec<String> {
        self.bi_orderable
            .iter()
            .filter(|name| {
                let ok = self.entry(name).map(|e| {
                    e.classification.verdict == Verdict::Trivial
                        || all_roots_real_positive(&e.alexander).unwrap_or(false)
                });
                ok != Some(true)
            })
            .cloned()
            .collect()
    }
}

/// Drops records above `max` crossings.
pub fn filter_max_crossings(records: Vec<KnotRecord>, max: u32) -> Vec<KnotRecord> {
    records.into_iter().filter(|r| r.crossings <= max).collect()
}

pub fn run_census(records: &[KnotRecord]) -> CensusReport {
    let mut report = CensusReport { total: records.len(), ..CensusReport::default() };
    let mut fibred: Vec<&KnotRecord> = records.iter().filter(|r| r.fibred).collect();
    fibred.sort_by(|a, b| {
        compare_names(&a.name, &b.name).then_with(|| a.alexander.to_string().cmp(&b.alexander.to_string()))
    });
    report.fibred = fibred.len();
    for r in fibred {
        let classification = match classify_fibred_knot(&r.alexander, true) {
            Ok(c) => c,
            Err(e) => {
                log::warn!("{}: {e}", r.name);
                report.diagnostics.push(Diagnostic { name: r.name.clone(), message: e.to_string() });
                Classification::invalid_input()
            }
        };
        let list = match classification.verdict {
            Verdict::BiOrderable => &mut report.bi_orderable,
            Verdict::NotBiOrderable => &mut report.not_bi_orderable,
            // the unknot has trivially bi-orderable group ℤ
            Verdict::Trivial => &mut report.bi_orderable,
            Verdict::Unknown => &mut report.unknown,
        };
        list.push(r.name.clone());
        let alexander = match r.alexander.normalize() {
            Ok(n) => n.poly.to_laurent(),
            Err(_) => r.alexander.clone(),
        };
        report.per_knot.push(KnotEntry { name: r.name.clone(), classification, alexander });
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

/// Text: counts, the bi-orderable table with polynomials, then the
/// not-bi-orderable and unknown name lists. JSON: see the module docs.
pub fn emit_report(report: &CensusReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        ReportFormat::Text => emit_text(report),
    }
}

fn emit_text(r: &CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "knots: {}", r.total);
    let _ = writeln!(out, "fibred: {}", r.fibred);
    let _ = writeln!(out, "bi-orderable: {}", r.bi_orderable.len());
    let _ = writeln!(out, "not bi-orderable: {}", r.not_bi_orderable.len());
    let _ = writeln!(out, "unknown: {}", r.unknown.len());
    if !r.bi_orderable.is_empty() {
        out.push_str("\nBi-orderable (all roots real and positive):\n");
        for name in &r.bi_orderable {
            let poly = r.entry(name).map(|e| e.alexander.to_unicode()).unwrap_or_default();
            let _ = writeln!(out, "{}  {poly}", display_name(name));
        }
    }
    for (title, list) in [
        ("Not bi-orderable (no positive real root)", &r.not_bi_orderable),
        ("Unknown", &r.unknown),
    ] {
        if !list.is_empty() {
            let names: Vec<String> = list.iter().map(|n| display_name(n)).collect();
            let _ = writeln!(out, "\n{title}:\n{}", names.join(", "));
        }
    }
    for d in &r.diagnostics {
        let _ = writeln!(out, "warning: {}: {}", d.name, d.message);
    }
    out
}

/// Differences between a report and reference name lists, compared by
/// [`canonical_name`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusDiff {
    pub bi_orderable_missing: Vec<String>,
    pub bi_orderable_extra: Vec<String>,
    pub not_bi_orderable_missing: Vec<String>,
    pub not_bi_orderable_extra: Vec<String>,
}

impl CensusDiff {
    pub fn is_empty(&self) -> bool {
        self.bi_orderable_missing.is_empty()
            && self.bi_orderable_extra.is_empty()
            && self.not_bi_orderable_missing.is_empty()
            && self.not_bi_orderable_extra.is_empty()
    }

    /// One line per differing name, e.g. `not-bi-orderable missing: 12n_19`.
    pub fn lines(&self) -> Vec<String> {
        [
            ("bi-orderable missing", &self.bi_orderable_missing),
            ("bi-orderable extra", &self.bi_orderable_extra),
            ("not-bi-orderable missing", &self.not_bi_orderable_missing),
            ("not-bi-orderable extra", &self.not_bi_orderable_extra),
        ]
        .into_iter()
        .flat_map(|(label, names)| names.iter().map(move |n| format!("{label}: {n}")))
        .collect()
    }
}

pub fn diff_against(report: &CensusReport, bi_orderable: &[String], not_bi_orderable: &[String]) -> CensusDiff {
    let set = |v: &[String]| v.iter().map(|n| canonical_name(n)).collect::<BTreeSet<_>>();
    let sorted = |s: BTreeSet<String>| {
        let mut v: Vec<String> = s.into_iter().collect();
        v.sort_by(|a, b| compare_names(a, b));
        v
    };
    let (got_bi, want_bi) = (set(&report.bi_orderable), set(bi_orderable));
    let (got_not, want_not) = (set(&report.not_bi_orderable), set(not_bi_orderable));
    CensusDiff {
        bi_orderable_missing: sorted(&want_bi - &got_bi),
        bi_orderable_extra: sorted(&got_bi - &want_bi),
        not_bi_orderable_missing: sorted(&want_not - &got_not),
        not_bi_orderable_extra: sorted(&got_not - &want_not),
    }
}
