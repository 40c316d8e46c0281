//! Pass/fail bookkeeping shared by every verification suite.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(id, true, detail)
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(id, false, detail)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
    /// 0 iff every check passed, 1 otherwise.
    pub exit_status: i32,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed()).count();
        let failed = checks.len() - passed;
        VerificationReport {
            suite: suite.into(),
            checks,
            summary: Summary { passed, failed },
            exit_status: i32::from(failed > 0),
        }
    }

    /// Concatenates several suites, prefixing each check id with its suite.
    pub fn combine(suite: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let checks = parts
            .into_iter()
            .flat_map(|r| {
                let s = r.suite;
                r.checks.into_iter().map(move |mut c| {
                    c.id = format!("{s}/{}", c.id);
                    c
                })
            })
            .collect();
        Self::new(suite, checks)
    }

    pub fn all_passed(&self) -> bool {
        self.exit_status == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{tag}] {}: {}", c.id, c.detail);
        }
        let _ = writeln!(
            out,
            "{}: {} passed, {} failed",
            self.suite, self.summary.passed, self.summary.failed
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_status_tracks_failures() {
        let ok = VerificationReport::new("a", vec![Check::pass("x", "")]);
        assert!(ok.all_passed());
        let bad = VerificationReport::new("b", vec![Check::pass("x", ""), Check::fail("y", "boom")]);
        assert_eq!(bad.exit_status, 1);
        assert_eq!(bad.summary, Summary { passed: 1, failed: 1 });
        let all = VerificationReport::combine("all", vec![ok, bad]);
        assert_eq!(all.checks[2].id, "b/y");
        assert_eq!(all.failures().count(), 1);
        assert!(all.render_text().contains("[FAIL] b/y: boom"));
    }

    #[test]
    fn json_round_trip() {
        let r = VerificationReport::new("t", vec![Check::fail("z", "detail")]);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"status\":\"fail\""));
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
