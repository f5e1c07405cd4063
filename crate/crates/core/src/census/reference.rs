//! Bundled reference data: a census-format table of the fibred knots up to
//! eight crossings, and the published up-to-twelve-crossing outcome lists.

use super::{load_reader, CsvSchema, KnotRecord};

const FIBRED_UP_TO_8: &str = include_str!("../../data/fibred_up_to_8.csv");
const BI_ORDERABLE_12: &str = include_str!("../../data/bi_orderable_12.txt");
const NOT_BI_ORDERABLE_12: &str = include_str!("../../data/not_bi_orderable_12.txt");

/// Fibred prime knots with at most 12 crossings in the reference snapshot.
pub const FIBRED_UP_TO_12: usize = 1246;

pub fn fibred_up_to_8() -> Vec<KnotRecord> {
    let loaded = load_reader(FIBRED_UP_TO_8.as_bytes(), &CsvSchema::default()).expect("bundled table");
    assert!(loaded.skipped.is_empty(), "bundled table has unreadable rows");
    loaded.records
}

fn names(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

pub fn bi_orderable_up_to_12() -> Vec<String> {
    names(BI_ORDERABLE_12)
}

pub fn not_bi_orderable_up_to_12() -> Vec<String> {
    names(NOT_BI_ORDERABLE_12)
}
