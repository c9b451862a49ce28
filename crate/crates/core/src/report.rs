//! Deterministic, line-oriented verification reports.
//!
//! A report is an ordered list of checks, each rendered as
//! `CHECK <id> <PASS|FAIL> <detail>`, followed by a final
//! `VERDICT <PASS|FAIL>` line. The format is stable so golden files and
//! shell pipelines need no structured parser.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// An ordered collection of named pass/fail checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, id: &str, detail: impl Into<String>) {
        self.push(id, Status::Pass, detail.into());
    }

    pub fn fail(&mut self, id: &str, detail: impl Into<String>) {
        self.push(id, Status::Fail, detail.into());
    }

    /// Records `ok` as a PASS/FAIL check.
    pub fn check(&mut self, id: &str, ok: bool, detail: impl Into<String>) {
        self.push(id, if ok { Status::Pass } else { Status::Fail }, detail.into());
    }

    fn push(&mut self, id: &str, status: Status, detail: String) {
        self.checks.push(Check { id: id.to_string(), status, detail });
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    /// PASS iff every check passed (vacuously PASS when empty).
    pub fn overall(&self) -> Status {
        if self.checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// The stable line rendering. Newlines inside details are flattened so
    /// every check stays on one line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let detail = check.detail.replace('\n', "; ");
            out.push_str(&format!("CHECK {} {} {}\n", check.id, check.status, detail));
        }
        out.push_str(&format!("VERDICT {}\n", self.overall()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_follows_the_checks() {
        let mut report = Report::new();
        assert_eq!(report.overall(), Status::Pass);
        report.pass("alpha", "fine");
        assert_eq!(report.overall(), Status::Pass);
        report.check("beta", false, "broken");
        assert_eq!(report.overall(), Status::Fail);
        report.pass("gamma", "fine again");
        assert_eq!(report.overall(), Status::Fail);
        assert_eq!(report.checks().len(), 3);
    }

    #[test]
    fn rendering_is_stable_and_single_line() {
        let mut report = Report::new();
        report.pass("size", "n=84");
        report.fail("law", "first\nsecond");
        assert_eq!(
            report.render(),
            "CHECK size PASS n=84\nCHECK law FAIL first; second\nVERDICT FAIL\n"
        );
    }
}
