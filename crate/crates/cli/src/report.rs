use serde::Serialize;
use serde_json::Value;

/// Output of one command. Field order is fixed.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs_digest: String,
    pub seed: u64,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "command: {}\nversion: {}\ninputs_digest: {}\nseed: {}\n",
            self.command, self.version, self.inputs_digest, self.seed
        );
        if let Value::Object(fields) = &self.result {
            for (key, value) in fields {
                render(&mut out, key, value, 0);
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        _ => None,
    }
}

/// Inline row for arrays of scalars, `None` otherwise.
fn row(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    if items.iter().any(|i| i.as_str().is_some_and(|s| s.contains(char::is_whitespace))) {
        return None;
    }
    items.iter().map(scalar).collect::<Option<Vec<_>>>().map(|s| s.join(" "))
}

fn render(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(value) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match value {
        Value::String(s) => {
            out.push_str(&format!("{pad}{key}: |\n"));
            for line in s.lines() {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        }
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{key}: []\n")),
        Value::Array(items) => {
            if let Some(r) = row(value) {
                out.push_str(&format!("{pad}{key}: [{r}]\n"));
                return;
            }
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                if let Some(s) = scalar(item) {
                    out.push_str(&format!("{pad}  - {s}\n"));
                } else if let Some(r) = row(item) {
                    out.push_str(&format!("{pad}  {r}\n"));
                } else {
                    render(out, &format!("[{i}]"), item, depth + 1);
                }
            }
        }
        Value::Object(fields) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in fields {
                render(out, k, v, depth + 1);
            }
        }
        _ => unreachable!(),
    }
}
