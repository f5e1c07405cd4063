use std::cmp::Ordering;

/// Rolfsen/Dowker–Thistlethwaite style name split into its parts:
/// `12n_0838` is `(12, "n", 838)`, `8_19` is `(8, "", 19)`.
fn parts(name: &str) -> Option<(u32, &str, u64)> {
    let (head, index) = name.split_once('_')?;
    let index = index.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(index);
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits_end = head.bytes().take_while(u8::is_ascii_digit).count();
    let (crossings, family) = head.split_at(digits_end);
    if crossings.is_empty() || !matches!(family, "" | "a" | "n") {
        return None;
    }
    Some((crossings.parse().ok()?, family, index.parse().ok()?))
}

/// Drops zero padding and braces from the index: `12a_{0125}` and `12a_0125`
/// both become `12a_125`. Other names are returned unchanged.
pub fn canonical_name(name: &str) -> String {
    match parts(name) {
        Some((c, f, i)) => format!("{c}{f}_{i}"),
        None => name.to_string(),
    }
}

/// Table typesetting with a braced index, `11n_{142}`.
pub fn display_name(name: &str) -> String {
    match name.split_once('_') {
        Some((head, index)) if parts(name).is_some() && !index.starts_with('{') => {
            format!("{head}_{{{index}}}")
        }
        _ => name.to_string(),
    }
}

/// Orders by crossing number, then alternating before non-alternating, then
/// index. Names that do not follow the convention sort last, by text.
pub fn compare_names(a: &str, b: &str) -> Ordering {
    match (parts(a), parts(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}
