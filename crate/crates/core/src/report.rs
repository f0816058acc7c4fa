use std::fmt;

use serde::{Deserialize, Serialize};

/// One verified identity or clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    /// First failing input, when failing.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Verdicts for every clause of a checked definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            clauses: Vec::new(),
        }
    }

    /// Records a clause; `Err(witness)` marks it failed.
    pub fn record(&mut self, name: impl Into<String>, outcome: Result<(), String>) {
        let (passed, witness) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.clauses.push(Clause {
            name: name.into(),
            passed,
            witness,
            detail: None,
        });
    }

    pub fn record_with_detail(
        &mut self,
        name: impl Into<String>,
        outcome: Result<(), String>,
        detail: impl Into<String>,
    ) {
        self.record(name, outcome);
        self.clauses.last_mut().unwrap().detail = Some(detail.into());
    }

    /// Appends every clause of `other`, prefixing names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.clauses {
            c.name = format!("{prefix}: {}", c.name);
            self.clauses.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Whether the named clause exists and passed.
    pub fn clause_passed(&self, name: &str) -> bool {
        self.clause(name).is_some_and(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.clauses {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "  [{mark}] {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, "  (witness: {w})")?;
            }
            if let Some(d) = &c.detail {
                write!(f, "  [{d}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Returns the first witness produced by `check` over `inputs`, if any.
pub fn first_failure<T>(
    inputs: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> bool,
    describe: impl Fn(&T) -> String,
) -> Result<(), String> {
    for x in inputs {
        if !check(&x) {
            return Err(describe(&x));
        }
    }
    Ok(())
}
