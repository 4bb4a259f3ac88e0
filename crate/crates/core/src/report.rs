//! Outcome records for identity checks.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A proved statement; a failure is a bug.
    Theorem,
    /// A statement only confirmed computationally in range.
    Confirmation,
    /// A statement expected to be false; passes when the failure is observed.
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub kind: CheckKind,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerifyReport {
    pub fn new(identity: impl Into<String>, kind: CheckKind) -> VerifyReport {
        VerifyReport {
            identity: identity.into(),
            kind,
            params: BTreeMap::new(),
            status: Status::Pass,
            checks: 0,
            witness: None,
            note: None,
        }
    }

    pub fn theorem(identity: impl Into<String>) -> VerifyReport {
        VerifyReport::new(identity, CheckKind::Theorem)
    }

    pub fn confirmation(identity: impl Into<String>) -> VerifyReport {
        VerifyReport::new(identity, CheckKind::Confirmation)
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> VerifyReport {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> VerifyReport {
        self.note = Some(note.into());
        self
    }

    /// Records one comparison; the first failure's witness is kept.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok {
            if self.status == Status::Pass {
                self.witness = Some(witness());
            }
            self.status = Status::Fail;
        }
        ok
    }

    /// Records an error raised while computing a side of the check.
    pub fn fail_with(&mut self, witness: impl Into<String>) {
        self.checks += 1;
        if self.status == Status::Pass {
            self.witness = Some(witness.into());
        }
        self.status = Status::Fail;
    }

    /// Folds the checks of a sub-report into this one.
    pub fn absorb(&mut self, other: &VerifyReport) {
        self.checks += other.checks;
        if !other.passed() && self.passed() {
            self.witness = other.witness.clone();
            self.status = Status::Fail;
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Key-sorted JSON value.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn summary_line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let kind = match self.kind {
            CheckKind::Theorem => "theorem",
            CheckKind::Confirmation => "CONFIRMATION",
            CheckKind::Counterexample => "counterexample",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{status} [{kind}] {} ({}; {} checks)", self.identity, params.join(", "), self.checks);
        if let Some(w) = &self.witness {
            line.push_str(&format!(" witness: {w}"));
        }
        if let Some(n) = &self.note {
            line.push_str(&format!(" [{n}]"));
        }
        line
    }
}

/// Runs a fallible check body, turning an error into a failed report.
pub fn guarded(
    mut report: VerifyReport,
    body: impl FnOnce(&mut VerifyReport) -> crate::Result<()>,
) -> VerifyReport {
    if let Err(e) = body(&mut report) {
        report.fail_with(format!("error: {e}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_witness_is_kept() {
        let mut r = VerifyReport::theorem("x").param("n_max", 3);
        r.check(true, || "a".into());
        r.check(false, || "b".into());
        r.check(false, || "c".into());
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.as_deref(), Some("b"));
        assert_eq!(r.checks, 3);
    }

    #[test]
    fn json_keys_are_sorted() {
        let r = VerifyReport::confirmation("y").param("z", 1).param("a", 2);
        let s = serde_json::to_string(&r.to_json()).unwrap();
        let keys = ["\"checks\"", "\"identity\"", "\"kind\"", "\"params\"", "\"status\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
    }
}
