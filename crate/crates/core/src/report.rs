use std::fmt;

use serde::{Deserialize, Serialize};

/// One named pass/fail result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) -> bool {
        self.checks.push(Check { name: name.into(), pass });
        pass
    }

    /// Appends every check of `other`, prefixing names with `prefix.`.
    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.check(format!("{prefix}.{}", c.name), c.pass);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    /// Result of the check called `name`, if present.
    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.pass { "pass" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}
