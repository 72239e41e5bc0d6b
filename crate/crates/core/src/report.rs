//! Machine-readable reports emitted by the command line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// not run for a documented reason; does not fail the report
    Downgraded,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<String, Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            dims: BTreeMap::new(),
            detail: None,
        }
    }

    pub fn downgraded(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Downgraded,
            dims: BTreeMap::new(),
            detail: Some(serde_json::Value::String(why.into())),
        }
    }

    pub fn dims(mut self, key: &str, dims: Vec<usize>) -> Self {
        self.dims.insert(key.to_string(), dims);
        self
    }

    pub fn detail<T: Serialize>(mut self, detail: &T) -> Self {
        self.detail = Some(serde_json::to_value(detail).expect("report details serialize"));
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, args: BTreeMap<String, String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.status != Status::Fail);
        Report {
            command: command.to_string(),
            args,
            checks,
            passed,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        crate::io::to_json(self)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {}\n", self.command);
        for (k, v) in &self.args {
            let _ = writeln!(s, "- {k}: `{v}`");
        }
        let _ = writeln!(s, "\n| check | status | dims |\n|---|---|---|");
        for c in &self.checks {
            let dims: Vec<String> = c.dims.iter().map(|(k, v)| format!("{k} {v:?}")).collect();
            let _ = writeln!(s, "| {} | {:?} | {} |", c.name, c.status, dims.join("; "));
        }
        for c in self.checks.iter().filter(|c| c.detail.is_some()) {
            let detail = serde_json::to_string(c.detail.as_ref().unwrap()).unwrap_or_default();
            let _ = writeln!(s, "\n**{}**: `{}`", c.name, detail);
        }
        let _ = writeln!(
            s,
            "\noverall: {}",
            if self.passed { "pass" } else { "fail" }
        );
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t} ms");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn downgraded_checks_do_not_fail() {
        let r = Report::new(
            "x",
            BTreeMap::new(),
            vec![Check::new("a", true), Check::downgraded("b", "no data")],
        );
        assert!(r.passed);
        let r = Report::new(
            "x",
            BTreeMap::new(),
            vec![Check::new("a", false).dims("h", vec![1, 0])],
        );
        assert!(!r.passed);
        assert!(r.to_json().contains("\"status\": \"fail\""));
        assert!(r.to_markdown().contains("| a | Fail | h [1, 0] |"));
    }
}
