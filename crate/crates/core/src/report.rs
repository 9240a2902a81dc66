use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The check does not apply to this subject.
    Skipped(String),
}

/// Result of checking one claim on one subject. Facts record the values
/// both sides of the claim were computed from; a failing report carries
/// the counterexample in `certificate`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub subject: String,
    pub outcome: Outcome,
    pub facts: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

impl VerificationReport {
    pub fn new(check: &str, subject: impl Into<String>) -> Self {
        VerificationReport {
            check: check.to_string(),
            subject: subject.into(),
            outcome: Outcome::Pass,
            facts: BTreeMap::new(),
            certificate: None,
        }
    }

    pub fn fact(mut self, key: &str, value: impl Serialize) -> Self {
        self.set_fact(key, value);
        self
    }

    pub fn set_fact(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).unwrap_or(Value::Null);
        self.facts.insert(key.to_string(), value);
    }

    /// Passes if `holds`, otherwise fails with `certificate`.
    pub fn require(mut self, holds: bool, certificate: impl Serialize) -> Self {
        if !holds && self.outcome == Outcome::Pass {
            self.outcome = Outcome::Fail;
            self.certificate = serde_json::to_value(certificate).ok();
        }
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.outcome = Outcome::Skipped(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.outcome {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail => s.failed += 1,
                Outcome::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_wins() {
        let r = VerificationReport::new("demo", "K3")
            .fact("order", 3)
            .require(true, "unused")
            .require(false, [1, 2])
            .require(false, "later");
        assert!(r.failed());
        assert_eq!(r.certificate, Some(serde_json::json!([1, 2])));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["outcome"]["status"], "fail");
        assert_eq!(json["facts"]["order"], 3);
    }

    #[test]
    fn summary_counts() {
        let reports = [
            VerificationReport::new("a", "x"),
            VerificationReport::new("b", "x").skipped("not regular"),
            VerificationReport::new("c", "x").require(false, ()),
        ];
        let s = Summary::of(&reports);
        assert_eq!((s.passed, s.failed, s.skipped), (1, 1, 1));
    }
}
