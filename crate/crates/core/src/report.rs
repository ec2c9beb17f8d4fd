//! Pass/fail records for axiom checks.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Where the identity failed, e.g. a basis pair.
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {} ≠ {}", self.at, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    /// Not applicable to this structure (e.g. no counit).
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub status: Status,
}

impl Law {
    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            Status::Fail(w) => Some(w),
            _ => None,
        }
    }
}

/// Ordered list of checked laws.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub laws: Vec<Law>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &str, outcome: Option<Witness>) {
        let status = match outcome {
            None => Status::Pass,
            Some(w) => Status::Fail(w),
        };
        self.laws.push(Law { name: name.to_string(), status });
    }

    pub fn skip(&mut self, name: &str, why: &str) {
        self.laws.push(Law { name: name.to_string(), status: Status::Skipped(why.to_string()) });
    }

    pub fn extend(&mut self, prefix: &str, other: LawReport) {
        for mut law in other.laws {
            law.name = format!("{prefix}{}", law.name);
            self.laws.push(law);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(Law::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Law> {
        self.laws.iter().find(|l| l.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(Law::passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.laws.iter().filter(|l| !l.passed()).map(|l| l.name.as_str()).collect()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for law in &self.laws {
            match &law.status {
                Status::Pass => writeln!(f, "{:<32} pass", law.name)?,
                Status::Fail(w) => writeln!(f, "{:<32} FAIL {w}", law.name)?,
                Status::Skipped(why) => writeln!(f, "{:<32} skip ({why})", law.name)?,
            }
        }
        Ok(())
    }
}

/// First index where `check` returns a witness.
pub fn first_failure<I, F>(items: I, mut check: F) -> Option<Witness>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<Witness>,
{
    items.into_iter().find_map(&mut check)
}
