use std::fmt;

use serde::Serialize;

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Outcome of a checker: a named list of checks plus the sampling
/// parameters that make failures reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub structure: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(structure: impl Into<String>) -> Self {
        Self { structure: structure.into(), seed: None, samples: None, checks: Vec::new() }
    }

    pub fn sampled(structure: impl Into<String>, seed: u64, samples: usize) -> Self {
        Self { seed: Some(seed), samples: Some(samples), ..Self::new(structure) }
    }

    /// Records a check; `counterexample == None` means it passed.
    pub fn record(&mut self, id: impl Into<String>, anchor: impl Into<String>, counterexample: Option<String>) {
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.into(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn assert_that(&mut self, id: &str, anchor: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.record(id, anchor, if ok { None } else { Some(detail()) });
    }

    /// Appends every check of `other`, ids prefixed with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { id: format!("{prefix}/{}", c.id), ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `"id: counterexample"` of the first failed check.
    pub fn first_failure(&self) -> Option<String> {
        self.failures().next().map(|c| format!("{}: {}", c.id, c.counterexample.as_deref().unwrap_or("")))
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// True iff the check exists and passed.
    pub fn ok(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.structure)?;
        if let (Some(seed), Some(n)) = (self.seed, self.samples) {
            write!(f, " (seed {seed}, {n} samples)")?;
        }
        writeln!(f)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  [{mark}] {} ({})", c.id, c.anchor)?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "         counterexample: {ce}")?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_fail_and_prefix() {
        let mut r = Report::new("x");
        r.record("a", "anchor", None);
        let mut s = Report::new("y");
        s.assert_that("b", "anchor", false, || "here".into());
        r.absorb("sub", s);
        assert!(!r.passed());
        assert!(r.ok("a"));
        assert_eq!(r.get("sub/b").unwrap().counterexample.as_deref(), Some("here"));
        assert!(r.to_string().contains("[FAIL] sub/b"));
    }
}
