use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

/// A named pass/fail entry of a report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

/// JSON report of one command: result fields at the top level, then the checks.
#[derive(Debug)]
pub struct Report {
    command: String,
    fields: Map<String, Value>,
    checks: Vec<ReportCheck>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self { command: command.to_string(), fields: Map::new(), checks: Vec::new() }
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("serializable");
        self.fields.insert(key.to_string(), v);
        self
    }

    /// Inserts every field of a serializable struct.
    pub fn flatten(&mut self, value: impl Serialize) -> &mut Self {
        match serde_json::to_value(value).expect("serializable") {
            Value::Object(map) => self.fields.extend(map),
            other => panic!("expected a JSON object, got {other}"),
        }
        self
    }

    pub fn check(&mut self, name: &str, pass: bool) -> &mut Self {
        self.check_with(name, pass, Value::Null)
    }

    pub fn check_with(&mut self, name: &str, pass: bool, detail: Value) -> &mut Self {
        self.checks.push(ReportCheck { name: name.to_string(), pass, detail });
        self
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_value(&self) -> Value {
        let mut checks = self.checks.clone();
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut out = Map::new();
        out.insert("schema".into(), SCHEMA.into());
        out.insert("command".into(), self.command.clone().into());
        for (k, v) in &self.fields {
            out.insert(k.clone(), v.clone());
        }
        out.insert("checks".into(), serde_json::to_value(checks).expect("serializable"));
        out.insert("pass".into(), self.pass().into());
        Value::Object(out)
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write(&self, out: Option<&Path>) -> std::io::Result<()> {
        let text = self.render();
        match out {
            Some(path) => std::fs::write(path, text),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn layout_and_pass() {
        let mut r = Report::new("demo");
        r.field("z", 1).field("a", 2).check("b", true).check("a", false);
        let v = r.to_value();
        assert_eq!(v["schema"], json!(1));
        assert_eq!(v["checks"][0]["name"], json!("a"));
        assert_eq!(v["pass"], json!(false));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["schema", "command", "z", "a", "checks", "pass"]);
    }

    #[test]
    fn empty_report_passes() {
        assert!(Report::new("demo").pass());
    }
}
