use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::graph::{Graph, Provenance};
use crate::rational::{self, Rational};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    /// The graph belongs to a known exceptional family and matched its
    /// expected values.
    Exception {
        family: String,
    },
    NotApplicable {
        reason: String,
    },
    Fails {
        reason: String,
    },
}

/// One check result, serialized as a single JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub graph: Option<Provenance>,
    pub n: usize,
    pub m: usize,
    pub quantities: BTreeMap<String, Value>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl TheoremReport {
    pub fn new(theorem: &str, g: &Graph) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            graph: g.provenance().cloned(),
            n: g.n(),
            m: g.m(),
            quantities: BTreeMap::new(),
            verdict: Verdict::Holds,
        }
    }

    pub fn rational(mut self, key: &str, value: &Rational) -> Self {
        self.quantities
            .insert(key.to_string(), Value::String(rational::to_string(value)));
        self
    }

    pub fn value(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.quantities.insert(key.to_string(), value.into());
        self
    }

    pub fn verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    /// Holds when `ok`, otherwise fails with `reason`.
    pub fn expect(self, ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            self.verdict(Verdict::Holds)
        } else {
            self.verdict(Verdict::Fails { reason: reason() })
        }
    }

    pub fn not_applicable(self, reason: impl Into<String>) -> Self {
        self.verdict(Verdict::NotApplicable {
            reason: reason.into(),
        })
    }

    pub fn is_failure(&self) -> bool {
        matches!(self.verdict, Verdict::Fails { .. })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// True when no report in the batch fails.
pub fn all_pass<'a>(reports: impl IntoIterator<Item = &'a TheoremReport>) -> bool {
    reports.into_iter().all(|r| !r.is_failure())
}
