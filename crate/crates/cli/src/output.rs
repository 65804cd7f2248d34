//! Rendering of command results. Floats always carry 17 significant digits
//! so output is byte-stable; non-finite floats become `null`.

use serde_json::{Map, Value};

use crate::args::Format;

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_json(v: &Value, out: &mut String) {
    match v {
        Value::Number(n) if n.is_f64() => match n.as_f64() {
            Some(x) if x.is_finite() => out.push_str(&float(x)),
            _ => out.push_str("null"),
        },
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_json(item, out);
            }
            out.push(']');
        }
        Value::Object(map) => {
            out.push('{');
            for (i, (k, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write_json(item, out);
            }
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, &mut out);
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => json(other),
    }
}

/// Header row plus one record per row. An array payload of objects gives
/// one record per element; anything else gives a single record.
fn csv(status: &str, payload: &Value) -> String {
    let rows: Vec<Map<String, Value>> = match payload {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => items
            .iter()
            .filter_map(|v| v.as_object().cloned())
            .collect(),
        Value::Object(map) => vec![map.clone()],
        other => vec![Map::from_iter([("value".to_string(), other.clone())])],
    };
    let mut header = vec!["status".to_string()];
    for row in &rows {
        for k in row.keys() {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for row in &rows {
        let record: Vec<String> = header
            .iter()
            .map(|k| {
                if k == "status" {
                    status.to_string()
                } else {
                    row.get(k).map(cell).unwrap_or_default()
                }
            })
            .collect();
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn render(format: Format, command: &str, status: &str, payload: &Value) -> String {
    match format {
        Format::Json => {
            let doc =
                serde_json::json!({ "command": command, "status": status, "payload": payload });
            let mut s = json(&doc);
            s.push('\n');
            s
        }
        Format::Csv => csv(status, payload),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(json(&json!(1.086_434_811_213_308)), "1.0864348112133080e0");
        assert_eq!(
            json(&json!({"a": [0.5, 3]})),
            "{\"a\":[5.0000000000000000e-1,3]}"
        );
        assert_eq!(json(&json!(f64::NAN)), "null");
    }

    #[test]
    fn csv_quotes_nested_values() {
        let out = csv("ok", &json!({"s": [0.5], "name": "a,b"}));
        assert_eq!(
            out,
            "status,s,name\r\nok,[5.0000000000000000e-1],\"a,b\"\r\n"
        );
    }
}
