//! Machine-readable run reports with a stable schema.
//!
//! Reports are byte-deterministic for fixed inputs and seed; wall-clock
//! timing therefore goes to stderr, never into the report.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    pub suite: String,
    pub orders: String,
    pub seed: u64,
    pub status: &'static str,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl RunReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let tag = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "skip",
            };
            out.push_str(&format!("{:<34} {}", check.name, tag));
            if !check.detail.is_empty() {
                out.push_str(&format!("  ({})", check.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!("status: {}\n", self.status));
        out
    }
}

pub struct CheckList {
    checks: Vec<CheckResult>,
    counterexample: Option<Value>,
}

impl CheckList {
    pub fn new() -> Self {
        CheckList {
            checks: Vec::new(),
            counterexample: None,
        }
    }

    pub fn pass(&mut self, name: &str) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: CheckStatus::Pass,
            detail: String::new(),
        });
    }

    pub fn skip(&mut self, name: &str, why: &str) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: CheckStatus::Skip,
            detail: why.to_string(),
        });
    }

    pub fn fail(&mut self, name: &str, detail: String, counterexample: Value) {
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: CheckStatus::Fail,
            detail,
        });
    }

    pub fn into_report(
        self,
        command: String,
        input: String,
        suite: String,
        orders: String,
        seed: u64,
    ) -> RunReport {
        let failed = self.checks.iter().any(|c| c.status == CheckStatus::Fail);
        RunReport {
            command,
            input,
            suite,
            orders,
            seed,
            status: if failed { "fail" } else { "pass" },
            checks: self.checks,
            counterexample: self.counterexample,
        }
    }
}
