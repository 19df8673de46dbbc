//! Verification reports: ordered lists of named checks with witnesses.

use serde::{Deserialize, Serialize};

use crate::multilinear::Equality;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis of the checked statement does not hold; nothing was concluded.
    Precondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, witness: Option<String>) {
        self.checks.push(Check { check: id.into(), status, witness });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.push(id, Status::Pass, None);
    }

    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(id, Status::Fail, Some(witness.into()));
    }

    pub fn precondition(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(id, Status::Precondition, Some(witness.into()));
    }

    /// Records a map equality.
    pub fn record(&mut self, id: impl Into<String>, e: Equality) {
        match e.witness() {
            None => self.pass(id),
            Some(w) => self.fail(id, w),
        }
    }

    pub fn flag(&mut self, id: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(id)
        } else {
            self.fail(id, witness)
        }
    }

    /// Records a boolean observation that is data rather than a pass/fail claim.
    pub fn note(&mut self, id: impl Into<String>, value: bool) {
        self.push(id, Status::Pass, Some(format!("value={value}")));
    }

    /// The boolean recorded by [`Report::note`]; false when absent.
    pub fn note_value(&self, id: &str) -> bool {
        self.get(id).and_then(|c| c.witness.as_deref()) == Some("value=true")
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { check: format!("{prefix}{}", c.check), ..c });
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn any_precondition(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Precondition)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status != Status::Pass)
    }

    /// Pretty JSON array of `{check, status, witness}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.checks).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Precondition => "PRECONDITION",
            };
            out.push_str(&format!("{tag} {}", c.check));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" ({w})"));
            }
            out.push('\n');
        }
        out
    }
}
