//! Pass/fail reports shared by the verification suites and the CLI.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub got: String,
    pub witness: String,
}

impl Case {
    pub fn pass(id: &str) -> Self {
        Case { id: id.to_string(), status: Status::Pass, expected: String::new(), got: String::new(), witness: String::new() }
    }

    pub fn fail(id: &str, expected: &str, got: &str, witness: &str) -> Self {
        Case { id: id.to_string(), status: Status::Fail, expected: expected.to_string(), got: got.to_string(), witness: witness.to_string() }
    }

    /// Pass when `expected == got`, recording both either way.
    pub fn compare(id: &str, expected: &str, got: &str) -> Self {
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Case { id: id.to_string(), status, expected: expected.to_string(), got: got.to_string(), witness: String::new() }
    }

    pub fn check(id: &str, ok: bool, detail: &str) -> Self {
        if ok {
            Case::pass(id)
        } else {
            Case::fail(id, "true", "false", detail)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), cases: Vec::new() }
    }

    pub fn push(&mut self, c: Case) {
        self.cases.push(c);
    }

    /// Appends another report's cases, prefixing their ids.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.cases {
            c.id = format!("{}/{}", other.suite, c.id);
            self.cases.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn summary(&self) -> String {
        let fails: Vec<String> = self
            .failures()
            .take(5)
            .map(|c| format!("{} (expected {}, got {}, witness {})", c.id, c.expected, c.got, c.witness))
            .collect();
        let n_fail = self.failures().count();
        if fails.is_empty() {
            format!("{}: {} cases pass", self.suite, self.cases.len())
        } else {
            format!("{}: {}/{} failed: {}", self.suite, n_fail, self.cases.len(), fails.join("; "))
        }
    }
}
