use serde_json::{Map, Value};

/// Compact JSON, or a two-column table with `--pretty`.
pub fn render(value: &Value, pretty: bool) -> String {
    if !pretty {
        return format!("{value}\n");
    }
    let Value::Object(map) = value else {
        return format!("{value:#}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (key, v) in map {
        match v {
            Value::Array(items) if items.iter().all(is_check) && !items.is_empty() => {
                out.push_str(&format!("{key}\n"));
                for item in items {
                    out.push_str(&check_line(item));
                }
            }
            _ => out.push_str(&format!("{key:<width$}  {v}\n")),
        }
    }
    out
}

fn is_check(v: &Value) -> bool {
    v.get("name").is_some() && v.get("pass").is_some()
}

fn check_line(v: &Value) -> String {
    let mark = if v["pass"] == Value::Bool(true) { "PASS" } else { "FAIL" };
    let name = v["name"].as_str().unwrap_or("");
    match v.get("detail").and_then(Value::as_str) {
        Some(d) => format!("  [{mark}] {name}: {d}\n"),
        None => format!("  [{mark}] {name}\n"),
    }
}

/// Adds `elapsed_ms` unless timing is switched off.
pub fn stamp(map: &mut Map<String, Value>, start: std::time::Instant, timing: bool) {
    if timing {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        map.insert("elapsed_ms".into(), Value::from((ms * 1e3).round() / 1e3));
    }
}
