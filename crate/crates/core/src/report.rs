//! Named pass/fail checks with witnesses.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Counterexample or offending values when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict}  {}", self.name)?;
        if let Some(w) = &self.witness {
            write!(f, "  [{w}]")?;
        }
        Ok(())
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// Records `outcome`; an `Err` carries the witness.
    pub fn push(&mut self, name: impl Into<String>, outcome: Result<(), String>) {
        let (passed, witness) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.checks.push(Check { name: name.into(), passed, witness });
    }

    pub fn push_flag(&mut self, name: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) {
        self.push(name, if passed { Ok(()) } else { Err(witness()) });
    }

    /// Appends `other`'s checks with `prefix: ` in front of each name.
    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
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

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// First element of `items` for which `f` fails, as an `Err` witness.
pub(crate) fn first_failure<I, T>(items: I, mut f: impl FnMut(&T) -> Result<(), String>) -> Result<(), String>
where
    I: IntoIterator<Item = T>,
{
    for x in items {
        f(&x)?;
    }
    Ok(())
}
