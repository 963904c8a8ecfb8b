//! Verification reports.

use serde::Serialize;
use serde_json::Value;

/// Outcome of a verification run. Failures carry witnesses.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Certificate {
    pub theorem: String,
    pub parameters: Value,
    pub status: Status,
    pub checked: usize,
    pub witnesses: Vec<String>,
    pub version: String,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Certificate {
    pub fn new(theorem: &str) -> Self {
        Self {
            theorem: theorem.to_string(),
            parameters: Value::Null,
            status: Status::Pass,
            checked: 0,
            witnesses: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn with_parameters(mut self, p: Value) -> Self {
        self.parameters = p;
        self
    }

    pub fn count(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, witness: String) {
        self.status = Status::Fail;
        // keep reports readable
        if self.witnesses.len() < 50 {
            self.witnesses.push(witness);
        }
    }

    /// Record a check; `Some(w)` is a failure witness.
    pub fn check(&mut self, outcome: Option<String>) {
        self.count();
        if let Some(w) = outcome {
            self.fail(w);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Fold another certificate into this one.
    pub fn absorb(&mut self, other: Certificate) {
        self.checked += other.checked;
        if !other.passed() {
            self.status = Status::Fail;
            for w in other.witnesses {
                self.fail(format!("[{}] {w}", other.theorem));
            }
        }
    }
}
