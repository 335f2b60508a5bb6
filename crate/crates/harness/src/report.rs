use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::ConfigRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

/// At most this many counterexamples are kept per check.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: Value,
    pub outcome: Outcome,
    pub reason: Option<String>,
    pub details: Value,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Accumulates one check; the clock starts at construction.
pub struct CheckBuilder {
    name: String,
    parameters: Map<String, Value>,
    details: Map<String, Value>,
    witnesses: Vec<String>,
    failures: usize,
    started: Instant,
}

impl CheckBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            parameters: Map::new(),
            details: Map::new(),
            witnesses: Vec::new(),
            failures: 0,
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.into(), to_value(value));
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.into(), to_value(value));
    }

    /// Records a failed case; `witness` is kept if there is room.
    pub fn fail(&mut self, witness: impl FnOnce() -> String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness());
        }
    }

    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness);
        }
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn finish(mut self) -> CheckRecord {
        let outcome = if self.failures == 0 { Outcome::Pass } else { Outcome::Fail };
        let reason = (self.failures > 0).then(|| format!("{} failing case(s)", self.failures));
        self.details.insert("failures".into(), Value::from(self.failures));
        self.record(outcome, reason)
    }

    pub fn skip(self, reason: impl Into<String>) -> CheckRecord {
        self.record(Outcome::Skipped, Some(reason.into()))
    }

    fn record(self, outcome: Outcome, reason: Option<String>) -> CheckRecord {
        CheckRecord {
            name: self.name,
            parameters: Value::Object(self.parameters),
            outcome,
            reason,
            details: Value::Object(self.details),
            witnesses: self.witnesses,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub outcome: Outcome,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub config: ConfigRecord,
    pub checks: Vec<CheckRecord>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: &str, config: ConfigRecord, checks: Vec<CheckRecord>, elapsed_ms: u64) -> Self {
        let count = |o| checks.iter().filter(|c| c.outcome == o).count();
        let (passed, failed, skipped) = (count(Outcome::Pass), count(Outcome::Fail), count(Outcome::Skipped));
        Self {
            suite: suite.into(),
            outcome: if failed > 0 { Outcome::Fail } else { Outcome::Pass },
            passed,
            failed,
            skipped,
            config,
            checks,
            elapsed_ms,
        }
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// Pretty JSON with a trailing newline. Object keys are sorted inside
    /// free-form maps and in declaration order elsewhere.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
