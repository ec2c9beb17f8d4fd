use std::fmt::Write as _;
use std::time::Duration;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use qisg_core::report::{LawReport, Status, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOut {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        WitnessOut { at: w.at.clone(), lhs: w.lhs.clone(), rhs: w.rhs.clone() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LawOut {
    pub name: String,
    /// `pass`, `fail` or `skip`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Everything a command prints. Timing stays out of JSON so that reruns
/// produce identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub laws: Vec<LawOut>,
    #[serde(serialize_with = "ordered")]
    pub counts: Vec<(String, Value)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn ordered<S: Serializer>(v: &[(String, Value)], s: S) -> Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(v.len()))?;
    for (k, x) in v {
        m.serialize_entry(k, x)?;
    }
    m.end()
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            passed: true,
            laws: Vec::new(),
            counts: Vec::new(),
            details: Vec::new(),
            seed: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn law(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        let failed = witness.is_some();
        self.passed &= !failed;
        self.laws.push(LawOut {
            name: name.into(),
            status: if failed { "fail" } else { "pass" },
            witness: witness.as_ref().map(WitnessOut::from),
            note: None,
        });
    }

    /// A yes/no check without a witness.
    pub fn claim(&mut self, name: impl Into<String>, ok: bool, note: impl Into<String>) {
        self.passed &= ok;
        let note = note.into();
        self.laws.push(LawOut {
            name: name.into(),
            status: if ok { "pass" } else { "fail" },
            witness: None,
            note: (!note.is_empty()).then_some(note),
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.laws.push(LawOut { name: name.into(), status: "skip", witness: None, note: Some(why.into()) });
    }

    pub fn laws(&mut self, prefix: &str, r: &LawReport) {
        for l in &r.laws {
            let name = format!("{prefix}{}", l.name);
            match &l.status {
                Status::Pass => self.law(name, None),
                Status::Fail(w) => self.law(name, Some(w.clone())),
                Status::Skipped(why) => self.skip(name, why.clone()),
            }
        }
    }

    pub fn count(&mut self, key: impl Into<String>, v: impl Into<Value>) {
        self.counts.push((key.into(), v.into()));
    }

    pub fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.counts {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "  {k:<28} {v}");
        }
        for l in &self.laws {
            let _ = write!(out, "  {:<40} {}", l.name, l.status);
            if let Some(w) = &l.witness {
                let _ = write!(out, "  at {}: {} ≠ {}", w.at, w.lhs, w.rhs);
            }
            if let Some(n) = &l.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        for d in &self.details {
            let _ = writeln!(out, "  {d}");
        }
        if let Some(s) = self.seed {
            let _ = writeln!(out, "  seed {s}");
        }
        let verdict = if self.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "result: {verdict} ({} ms)", self.elapsed.as_millis());
        out
    }
}
