use serde::Serialize;

/// Joins a header and rows into CSV text with `\n` line endings.
///
/// Fields are numbers or fixed identifiers, so no quoting is needed.
pub fn csv<S: AsRef<str>>(header: &[&str], rows: impl IntoIterator<Item = Vec<S>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let fields: Vec<&str> = row.iter().map(AsRef::as_ref).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize to JSON");
    out.push('\n');
    out
}

pub fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
