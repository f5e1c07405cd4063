use std::fmt;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::Serialize;

use crate::poly::{parse_poly, LaurentPolynomial};

use super::CensusError;

/// One census row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    /// 0 is reserved for the unknot.
    pub crossings: u32,
    pub fibred: bool,
    pub alexander: LaurentPolynomial,
}

/// Column names and value conventions of a knot table.
///
/// The defaults match a comma-separated KnotInfo export:
/// `name`, `crossing_number`, `fibered` (`Y`/`N`), `alexander_polynomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvSchema {
    pub name: String,
    pub crossings: String,
    pub fibred: String,
    pub alexander: String,
    pub fibred_true: Vec<String>,
    pub fibred_false: Vec<String>,
    pub delimiter: u8,
}

impl Default for CsvSchema {
    fn default() -> Self {
        Self {
            name: "name".into(),
            crossings: "crossing_number".into(),
            fibred: "fibered".into(),
            alexander: "alexander_polynomial".into(),
            fibred_true: vec!["Y".into()],
            fibred_false: vec!["N".into()],
            delimiter: b',',
        }
    }
}

impl CsvSchema {
    /// Reads `key = value` lines over the defaults. Keys: `name`,
    /// `crossings`, `fibred`, `alexander`, `fibred_true`, `fibred_false`
    /// (comma-separated lists) and `delimiter` (one character, or `tab`).
    pub fn parse_config(text: &str) -> Result<Self, CensusError> {
        let mut schema = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| CensusError::BadSchema { line: lineno + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key = value".into()))?;
            let value = value.trim().to_string();
            let list = || value.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>();
            match key.trim() {
                "name" => schema.name = value,
                "crossings" => schema.crossings = value,
                "fibred" => schema.fibred = value,
                "alexander" => schema.alexander = value,
                "fibred_true" => schema.fibred_true = list(),
                "fibred_false" => schema.fibred_false = list(),
                "delimiter" => {
                    schema.delimiter = match value.as_str() {
                        "tab" | "\\t" => b'\t',
                        v if v.len() == 1 => v.as_bytes()[0],
                        v => return Err(bad(format!("delimiter must be one byte, got {v:?}"))),
                    }
                }
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        Ok(schema)
    }

    pub fn from_file(path: &Path) -> Result<Self, CensusError> {
        let text = std::fs::read_to_string(path).map_err(|e| CensusError::io(path, e))?;
        Self::parse_config(&text)
    }

    fn fibred_value(&self, cell: &str) -> Option<bool> {
        if self.fibred_true.iter().any(|v| v == cell) {
            Some(true)
        } else if self.fibred_false.iter().any(|v| v == cell) {
            Some(false)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SkipReason {
    EmptyName,
    BadCrossings { value: String },
    BadFibred { value: String },
    BadPolynomial { value: String, error: String },
    ShortRow,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::EmptyName => f.write_str("empty name"),
            SkipReason::BadCrossings { value } => write!(f, "bad crossing number {value:?}"),
            SkipReason::BadFibred { value } => write!(f, "unrecognized fibredness {value:?}"),
            SkipReason::BadPolynomial { value, error } => write!(f, "polynomial {value:?}: {error}"),
            SkipReason::ShortRow => f.write_str("row has too few fields"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedRow {
    /// 1-based line of the row in the file.
    pub line: u64,
    pub name: String,
    pub reason: SkipReason,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoadedCsv {
    pub records: Vec<KnotRecord>,
    pub skipped: Vec<SkippedRow>,
}

pub fn load_csv(path: &Path, schema: &CsvSchema) -> Result<LoadedCsv, CensusError> {
    let file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CensusError::FileNotFound(path.to_path_buf()),
        _ => CensusError::io(path, e),
    })?;
    load_reader(file, schema)
}

pub fn load_reader<R: Read>(reader: R, schema: &CsvSchema) -> Result<LoadedCsv, CensusError> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(schema.delimiter)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers().map_err(csv_err)?.clone();
    let column = |role: &'static str, name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CensusError::MissingColumn { role, column: name.to_string() })
    };
    let name_col = column("name", &schema.name)?;
    let crossing_col = column("crossings", &schema.crossings)?;
    let fibred_col = column("fibredness", &schema.fibred)?;
    let alexander_col = column("alexander", &schema.alexander)?;

    let mut out = LoadedCsv::default();
    for row in rdr.records() {
        let row = row.map_err(csv_err)?;
        let line = row.position().map_or(0, |p| p.line());
        let name = row.get(name_col).unwrap_or("").to_string();
        let fields = (row.get(crossing_col), row.get(fibred_col), row.get(alexander_col));
        let (Some(crossings), Some(fibred), Some(alexander)) = fields else {
            out.skipped.push(SkippedRow { line, name, reason: SkipReason::ShortRow });
            continue;
        };
        match parse_record(&name, crossings, fibred, alexander, schema) {
            Ok(record) => out.records.push(record),
            Err(reason) => {
                log::debug!("skipping line {line} ({name}): {reason}");
                out.skipped.push(SkippedRow { line, name, reason });
            }
        }
    }
    Ok(out)
}

fn parse_record(
    name: &str,
    crossings: &str,
    fibred: &str,
    alexander: &str,
    schema: &CsvSchema,
) -> Result<KnotRecord, SkipReason> {
    if name.is_empty() {
        return Err(SkipReason::EmptyName);
    }
    let crossings = crossings
        .parse()
        .map_err(|_| SkipReason::BadCrossings { value: crossings.to_string() })?;
    let fibred = schema
        .fibred_value(fibred)
        .ok_or_else(|| SkipReason::BadFibred { value: fibred.to_string() })?;
    let bad_poly = |error: String| SkipReason::BadPolynomial { value: alexander.to_string(), error };
    let alexander = parse_poly(alexander).map_err(|e| bad_poly(e.to_string()))?;
    if alexander.is_zero() {
        return Err(bad_poly("zero polynomial".into()));
    }
    Ok(KnotRecord { name: name.to_string(), crossings, fibred, alexander })
}

fn csv_err(e: csv::Error) -> CensusError {
    CensusError::Csv(e.to_string())
}
