//! Uniform verification rows shared by the CLI and the test suites.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The printed claim disagrees with the computation; reported, not failed.
    DiscrepancyFlagged,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Stated in the source text.
    Printed,
    /// Computed independently (binomials, Weyl formula, hand algebra).
    Derived,
    /// Follows immediately from definitions.
    Trivial,
}

#[derive(Clone, Debug, Serialize)]
pub struct Expected {
    pub value: Value,
    pub source: Source,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub anchor: String,
    pub expected: Expected,
    pub computed: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    /// Pass iff `expected == computed`, fail otherwise.
    pub fn compare(
        id: &str,
        anchor: &str,
        expected: Value,
        source: Source,
        computed: Value,
    ) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        Self::with_status(id, anchor, expected, source, computed, status)
    }

    /// Pass iff equal; a mismatch is flagged rather than failed.
    pub fn flag_on_mismatch(
        id: &str,
        anchor: &str,
        expected: Value,
        source: Source,
        computed: Value,
    ) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::DiscrepancyFlagged
        };
        Self::with_status(id, anchor, expected, source, computed, status)
    }

    pub fn with_status(
        id: &str,
        anchor: &str,
        expected: Value,
        source: Source,
        computed: Value,
        status: Status,
    ) -> Self {
        VerificationReport {
            check_id: id.into(),
            anchor: anchor.into(),
            expected: Expected {
                value: expected,
                source,
            },
            computed,
            status,
            runtime_ms: None,
        }
    }

    pub fn timed(mut self, ms: u64) -> Self {
        self.runtime_ms = Some(ms);
        self
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

/// A group of rows plus a free-form payload.
#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub payload: Value,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section {
            name: name.into(),
            reports: Vec::new(),
            payload: Value::Null,
        }
    }

    pub fn push(&mut self, r: VerificationReport) {
        self.reports.push(r);
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| r.is_failure()).count()
    }

    pub fn get(&self, id: &str) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.check_id == id)
    }

    /// Drops runtimes so that output is reproducible byte for byte.
    pub fn strip_timings(&mut self) {
        for r in &mut self.reports {
            r.runtime_ms = None;
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.name);
        for r in &self.reports {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::DiscrepancyFlagged => "flagged",
            };
            out.push_str(&format!(
                "{status:8} {:40} computed {}",
                r.check_id,
                compact(&r.computed)
            ));
            if r.status != Status::Pass {
                out.push_str(&format!(" expected {}", compact(&r.expected.value)));
            }
            if let Some(ms) = r.runtime_ms {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
        }
        out
    }
}

fn compact(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > 120 {
        let cut: String = s.chars().take(117).collect();
        format!("{cut}...")
    } else {
        s
    }
}

/// Runs `f` and returns its result with the elapsed milliseconds.
pub fn time<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed().as_millis() as u64)
}
