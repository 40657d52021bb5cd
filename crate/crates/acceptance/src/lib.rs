//! Helpers for the acceptance criteria run by `tests/acceptance.rs`.

use lmp_core::{Family, RootSystemType};
use lmp_verify::report::{Config, SuiteReport, VerificationReport};

pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }

    /// `scope: all exact`, or the offending cases.
    pub fn from_failures(scope: &str, bad: &[String]) -> Self {
        let detail = if bad.is_empty() {
            format!("{scope}: all exact")
        } else {
            format!("{scope}: {}", bad.join("; "))
        };
        Self::new(bad.is_empty(), detail)
    }

    pub fn line(&self, number: usize, name: &str) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {number:>2} {status}: {name}: {}", self.detail)
    }
}

/// Configuration with a 1-based parabolic index.
pub fn config(family: Family, rank: usize, parabolic: usize) -> Config {
    Config::new(
        RootSystemType::new(family, rank).expect("valid type"),
        parabolic - 1,
    )
}

pub fn report<'a>(suite: &'a SuiteReport, c: &Config) -> &'a VerificationReport {
    &suite
        .entries
        .iter()
        .find(|e| &e.report.config == c)
        .unwrap_or_else(|| panic!("{} missing from the sweep", c.label()))
        .report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines() {
        let o = Outcome::from_failures("scope", &[]);
        assert_eq!(
            o.line(3, "name"),
            "criterion  3 PASS: name: scope: all exact"
        );
        let o = Outcome::from_failures("scope", &["x".into(), "y".into()]);
        assert_eq!(o.line(11, "name"), "criterion 11 FAIL: name: scope: x; y");
    }
}
