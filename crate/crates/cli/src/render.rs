//! Output rendering. Objects and arrays of objects are indented; arrays
//! holding only numbers (or rows of numbers) stay on one line.

use num_bigint::BigInt;
use quiverc_core::Matrix;
use serde_json::Value;

pub struct Rendered {
    json: Value,
    table: String,
}

impl Rendered {
    pub fn new(json: Value, table: String) -> Self {
        Rendered { json, table }
    }

    /// Integers print as JSON numbers when they fit, as strings otherwise.
    pub fn integer(value: &BigInt) -> Self {
        let json = i64::try_from(value).map(Value::from).unwrap_or_else(|_| Value::from(value.to_string()));
        Rendered { json, table: format!("{value}\n") }
    }

    pub fn emit(&self, table: bool) -> String {
        if table {
            return self.table.clone();
        }
        let mut out = String::new();
        write_value(&self.json, 0, &mut out);
        out.push('\n');
        out
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(map) => map.is_empty(),
        _ => true,
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        _ if is_flat(v) => out.push_str(&compact(v)),
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&compact(&Value::from(key.as_str())));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

pub fn matrix_rows(m: &Matrix) -> String {
    (0..m.rows())
        .map(|r| {
            let row: Vec<String> = m.row(r).iter().map(u32::to_string).collect();
            format!("  [{}]\n", row.join(" "))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn layout() {
        let r = Rendered::new(json!({"b": [[1, 0], [1, 1]], "a": {"x": []}, "c": [{"k": 1}]}), String::new());
        assert_eq!(
            r.emit(false),
            "{\n  \"b\": [[1,0],[1,1]],\n  \"a\": {\n    \"x\": []\n  },\n  \"c\": [\n    {\n      \"k\": 1\n    }\n  ]\n}\n"
        );
        assert_eq!(Rendered::new(json!([1, 2]), String::new()).emit(false), "[1,2]\n");
    }
}
