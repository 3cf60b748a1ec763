use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed law instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: String,
}

/// Outcome of an exhaustive law check: every instance that was examined is
/// counted, and every failing one is listed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checks_run: usize,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one law instance. `witness` is only rendered on failure.
    pub fn check<W: FnOnce() -> String>(&mut self, law: &str, holds: bool, witness: W) {
        self.checks_run += 1;
        if !holds {
            self.violations.push(Violation {
                law: law.to_string(),
                witness: witness(),
            });
        }
    }

    pub fn fail(&mut self, law: &str, witness: impl Into<String>) {
        self.checks_run += 1;
        self.violations.push(Violation {
            law: law.to_string(),
            witness: witness.into(),
        });
    }

    pub fn merge(&mut self, other: LawReport) {
        self.checks_run += other.checks_run;
        self.violations.extend(other.violations);
    }

    /// Prefixes every law name, e.g. `pentagon` becomes `displayed pentagon`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for v in &mut self.violations {
            v.law = format!("{prefix} {}", v.law);
        }
        self
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn violations_of<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.law == law)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} checks, {} violations",
            self.checks_run,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  {}: {}", v.law, v.witness)?;
        }
        Ok(())
    }
}
