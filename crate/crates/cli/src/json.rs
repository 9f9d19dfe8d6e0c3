//! Diff-friendly JSON text: objects and nested arrays one entry per line,
//! arrays of scalars (labels, pairs) on a single line.

use serde_json::Value;

/// Render a value; the output ends with a newline.
pub fn to_text(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn scalar(v: &Value) -> String {
    serde_json::to_string(v).expect("scalars always serialize")
}

fn write_value(out: &mut String, value: &Value, level: usize) {
    match value {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (key, v)) in map.iter().enumerate() {
                indent(out, level + 1);
                out.push_str(&scalar(&Value::String(key.clone())));
                out.push_str(": ");
                write_value(out, v, level + 1);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(out, level);
            out.push('}');
        }
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                indent(out, level + 1);
                write_value(out, v, level + 1);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            indent(out, level);
            out.push(']');
        }
        v => out.push_str(&scalar(v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn pairs_stay_on_one_line() {
        let v = json!({"name": "X", "pairs": [["a", "b"], ["c", "d"]], "empty": []});
        assert_eq!(
            to_text(&v),
            "{\n  \"name\": \"X\",\n  \"pairs\": [\n    [\"a\", \"b\"],\n    [\"c\", \"d\"]\n  ],\n  \"empty\": []\n}\n"
        );
    }

    #[test]
    fn output_parses_back() {
        let v = json!({"a": [1, 2, {"b": [[true]]}], "c": {}});
        let back: Value = serde_json::from_str(&to_text(&v)).unwrap();
        assert_eq!(back, v);
    }
}
