//! JSON report schema shared by the certificate bundles and the CLI.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// One verified step: what was checked, on which inputs (rendered in the
/// module's textual syntax), what came out, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The law or claim being checked, in plain words.
    pub law: String,
    pub inputs: Vec<String>,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        law: impl Into<String>,
        inputs: Vec<String>,
        computed: impl Into<String>,
        ok: bool,
    ) -> Check {
        Check {
            name: name.into(),
            law: law.into(),
            inputs,
            computed: computed.into(),
            verdict: Verdict::from_bool(ok),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Check {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, checks: Vec<Check>) -> Report {
        let mut summary = Summary::default();
        for c in &checks {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Unknown => summary.unknown += 1,
            }
        }
        Report {
            command: command.into(),
            checks,
            summary,
            time_ms: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.unknown == 0
    }

    /// 0 when everything passed, 1 otherwise; parse failures exit 2 before a
    /// report exists.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.verdict == Verdict::Pass)
}
