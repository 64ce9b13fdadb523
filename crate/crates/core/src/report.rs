//! Check outcomes and JSON report records.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Result of checking a family of exact identities.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<f64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub counts: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Record {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Record {
            name: name.into(),
            params: BTreeMap::new(),
            pass,
            lhs: None,
            rhs: None,
            counts: BTreeMap::new(),
            detail: None,
            timing_ms: None,
        }
    }

    pub fn from_tally(name: impl Into<String>, t: &Tally) -> Self {
        let mut r = Record::new(name, t.passed());
        r.counts.insert("checked".into(), t.checked as i64);
        r.counts.insert("failures".into(), t.failures.len() as i64);
        if let Some(f) = t.failures.iter().find(|f| !f.is_empty()) {
            r.detail = Some(f.clone());
        }
        r
    }

    pub fn param(mut self, k: &str, v: impl Into<serde_json::Value>) -> Self {
        self.params.insert(k.to_string(), v.into());
        self
    }

    pub fn count(mut self, k: &str, v: i64) -> Self {
        self.counts.insert(k.to_string(), v);
        self
    }

    pub fn values(mut self, lhs: f64, rhs: f64) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub pass: bool,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(command: impl Into<String>, records: Vec<Record>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            pass: records.iter().all(|r| r.pass),
            records,
        }
    }
}
