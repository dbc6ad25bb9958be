//! Plain-text rendering of JSON reports.
//!
//! Objects become `key: value` lines with dotted paths for nesting; arrays of
//! objects become aligned tables.

use serde_json::Value;

pub fn table(report: &Value) -> String {
    let mut lines = Vec::new();
    walk("", report, &mut lines);
    lines.join("\n")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn walk(prefix: &str, v: &Value, lines: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                walk(&join(prefix, k), x, lines);
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            lines.push(format!("{prefix}:"));
            rows(items, lines);
        }
        other => lines.push(format!("{prefix}: {}", scalar(other))),
    }
}

fn rows(items: &[Value], lines: &mut Vec<String>) {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for k in item.as_object().expect("objects only").keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| columns.iter().map(|c| item.get(c).map_or("-".into(), scalar)).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let fmt = |row: &[String]| -> String {
        row.iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    lines.push(format!("  {}", fmt(&columns)));
    for r in &cells {
        lines.push(format!("  {}", fmt(r)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flat_and_nested() {
        let v = json!({"a": 1, "b": {"c": "x", "d": [1, 2]}, "e": null});
        assert_eq!(table(&v), "a: 1\nb.c: x\nb.d: [1, 2]\ne: -");
    }

    #[test]
    fn rows_align() {
        let v = json!({"rows": [{"r": 1, "dim": 2}, {"r": 10, "dim": 3}]});
        assert_eq!(table(&v), "rows:\n  r   dim\n  1   2\n  10  3");
    }
}
