//! Structured pass/fail records tying a named claim to computed evidence.

use serde::Serialize;

/// Three-valued outcome. `Flagged` marks a documented discrepancy between
/// a reference value and the computation: the computation stands, the
/// reference value is reported, and the run is not considered a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Flagged,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub claim: String,
    pub status: CheckStatus,
    pub evidence: serde_json::Value,
}

impl CheckReport {
    pub fn new(
        suite: impl Into<String>,
        claim: impl Into<String>,
        status: CheckStatus,
        evidence: serde_json::Value,
    ) -> Self {
        CheckReport {
            suite: suite.into(),
            claim: claim.into(),
            status,
            evidence,
        }
    }

    pub fn pass(suite: impl Into<String>, claim: impl Into<String>, evidence: serde_json::Value) -> Self {
        Self::new(suite, claim, CheckStatus::Pass, evidence)
    }

    pub fn fail(suite: impl Into<String>, claim: impl Into<String>, evidence: serde_json::Value) -> Self {
        Self::new(suite, claim, CheckStatus::Fail, evidence)
    }

    pub fn flagged(
        suite: impl Into<String>,
        claim: impl Into<String>,
        evidence: serde_json::Value,
    ) -> Self {
        Self::new(suite, claim, CheckStatus::Flagged, evidence)
    }

    pub fn from_bool(
        suite: impl Into<String>,
        claim: impl Into<String>,
        ok: bool,
        evidence: serde_json::Value,
    ) -> Self {
        if ok {
            Self::pass(suite, claim, evidence)
        } else {
            Self::fail(suite, claim, evidence)
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// `true` when no report failed (flagged entries are acceptable).
pub fn all_good(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| !r.is_fail())
}
