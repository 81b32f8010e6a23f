use serde::Serialize;

/// Outcome of one check on one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub case: String,
    /// Number of individual assertions evaluated.
    pub checks: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: &str, case: &str) -> Self {
        VerificationReport { check: check.to_string(), case: case.to_string(), checks: 0, failures: vec![], notes: vec![] }
    }

    pub fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `PASS check case (n checks)` plus one indented line per failure.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {} {} ({} checks)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.case,
            self.checks
        );
        for n in &self.notes {
            s.push_str(&format!("\n    note: {n}"));
        }
        for f in &self.failures {
            s.push_str(&format!("\n    failure: {f}"));
        }
        s
    }
}
