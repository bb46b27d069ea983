//! Report values and their JSON / table renderings.

use asym_core::{Complex64, ElementSet};
use serde_json::{Map, Value};

/// Rounds to 12 significant digits; non-finite values become strings.
pub fn num(x: f64) -> Value {
    if x.is_nan() {
        return Value::from("nan");
    }
    if x.is_infinite() {
        return Value::from(if x > 0.0 { "inf" } else { "-inf" });
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    // Drop the sign of zero so identical results print identically.
    Value::from(rounded + 0.0)
}

pub fn nums(xs: impl IntoIterator<Item = f64>) -> Value {
    Value::Array(xs.into_iter().map(num).collect())
}

pub fn complex(z: Complex64) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), num(z.re));
    m.insert("im".into(), num(z.im));
    Value::Object(m)
}

pub fn set(s: &ElementSet) -> Value {
    Value::Array(s.iter().map(|&g| Value::from(g)).collect())
}

pub fn matrix(rows: impl IntoIterator<Item = Vec<f64>>) -> Value {
    Value::Array(rows.into_iter().map(nums).collect())
}

/// Builds a JSON object from `(key, value)` pairs, in order.
#[macro_export]
macro_rules! obj {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut m = serde_json::Map::new();
        $(m.insert($k.to_string(), serde_json::Value::from($v));)*
        serde_json::Value::Object(m)
    }};
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(scalar_leaf) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn scalar_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_record_list(items: &[Value]) -> bool {
    !items.is_empty()
        && items.iter().all(|x| match x {
            Value::Object(m) => m.values().all(|v| scalar(v).is_some()),
            _ => false,
        })
}

fn render_records(out: &mut String, items: &[Value], pad: &str) {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for k in item.as_object().unwrap().keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| {
            let m = item.as_object().unwrap();
            columns
                .iter()
                .map(|c| m.get(c).and_then(scalar).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap())
        .collect();
    let line = |row: &[String]| {
        let parts: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        format!("{pad}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(&columns));
    for row in &cells {
        out.push_str(&line(row));
    }
}

fn render_object(out: &mut String, map: &Map<String, Value>, indent: usize) {
    let pad = " ".repeat(indent);
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in map {
        if let Some(s) = scalar(v) {
            out.push_str(&format!("{pad}{k:<width$}  {s}\n"));
            continue;
        }
        out.push_str(&format!("{pad}{k}:\n"));
        match v {
            Value::Object(inner) => render_object(out, inner, indent + 2),
            Value::Array(items) if is_record_list(items) => render_records(out, items, &" ".repeat(indent + 2)),
            Value::Array(items) => {
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            render_object(out, inner, indent + 4);
                            out.push('\n');
                        }
                        other => out.push_str(&format!(
                            "{pad}  {}\n",
                            scalar(other).unwrap_or_else(|| other.to_string())
                        )),
                    }
                }
            }
            _ => unreachable!("scalars handled above"),
        }
    }
}

/// Human-readable rendering: scalars as aligned `key  value` lines, lists of flat
/// records as column tables, matrices row by row.
pub fn render_table(report: &Value) -> String {
    let mut out = String::new();
    match report {
        Value::Object(map) => render_object(&mut out, map, 0),
        other => out.push_str(&other.to_string()),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(0.6).to_string(), "0.6");
        assert_eq!(num(std::f64::consts::PI).to_string(), "3.14159265359");
        assert_eq!(num(-0.0).to_string(), "0.0");
        assert_eq!(num(f64::INFINITY), Value::from("inf"));
        assert_eq!(num(1.234567890123456e-300).to_string(), "1.23456789012e-300");
    }

    #[test]
    fn table_layout() {
        let v = obj! {
            "subcommand" => "chi",
            "elements" => vec![obj! {"g" => 0, "modulus" => num(1.0)}, obj! {"g" => 1, "modulus" => num(0.6)}],
            "sym" => vec![0],
        };
        let t = render_table(&v);
        assert!(t.contains("subcommand  chi"));
        assert!(t.contains("g  modulus"));
        assert!(t.contains("1      0.6"));
        assert!(t.contains("sym  [0]") || t.contains("sym         [0]"));
    }
}
