use serde_json::Value;

use crate::monomial::Monomial;

/// Writes an exponent as `q` or `q-1` when it equals one of them.
pub fn symbolic_monomial(m: &Monomial<u64>, q: u64) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| {
            let var = format!("x{}", i + 1);
            if a == q {
                format!("{var}^q")
            } else if a + 1 == q {
                format!("{var}^(q-1)")
            } else if a == 1 {
                var
            } else {
                format!("{var}^{a}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Indented `key: value` rendering of a report.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) => Some(
            serde_json::to_string(v).unwrap_or_else(|_| format!("{a:?}")),
        ),
        _ => None,
    }
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, v, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                out.push_str(&format!("{pad}[{i}]\n"));
                write_value(out, v, indent + 1);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_tokens() {
        let m = Monomial::new(vec![1u64, 1, 0, 0, 2]);
        assert_eq!(symbolic_monomial(&m, 2), "x1^(q-1)*x2^(q-1)*x5^q");
        let m = Monomial::new(vec![8u64, 9, 1, 5]);
        assert_eq!(symbolic_monomial(&m, 9), "x1^(q-1)*x2^q*x3*x4^5");
        assert_eq!(symbolic_monomial(&Monomial::new(vec![0u64, 0]), 3), "1");
    }

    #[test]
    fn text_rendering() {
        let v = serde_json::json!({"case": "III", "c": [0, 1], "genfun": {"numerator": [0, 1, -1]}});
        assert_eq!(render_text(&v), "c: [0,1]\ncase: III\ngenfun:\n  numerator: [0,1,-1]\n");
    }
}
