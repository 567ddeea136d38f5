use exact_linalg::Matrix;
use serde::{Deserialize, Serialize};

/// One named exact check. Failing checks carry the matrices involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub offending: Vec<Matrix>,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), anchor: anchor.into(), passed, detail: String::new(), offending: Vec::new() }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    /// Attaches matrices only when the check failed.
    pub fn offending_if_failed(mut self, ms: Vec<Matrix>) -> Self {
        if !self.passed {
            self.offending = ms;
        }
        self
    }

    /// Compares two matrices; on mismatch both are recorded.
    pub fn equal(name: impl Into<String>, anchor: impl Into<String>, got: &Matrix, want: &Matrix) -> Self {
        Check::new(name, anchor, got == want).offending_if_failed(vec![got.clone(), want.clone()])
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Self {
        Report { checks }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }
}
