//! Axiom-check reports.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::CheckMode;
use crate::error::Error;
use crate::exactla::SparseVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The first failing input tuple of an axiom, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub status: Status,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The outcome of checking every axiom of one object.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub subject: String,
    pub mode: String,
    pub entries: Vec<AxiomEntry>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl Report {
    pub fn new(subject: impl Into<String>, mode: CheckMode) -> Report {
        Report {
            subject: subject.into(),
            mode: mode.describe(),
            entries: Vec::new(),
            elapsed_ms: 0,
            started: Some(Instant::now()),
        }
    }

    /// Stops the clock.
    pub fn finish(mut self) -> Report {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn entry(&self, axiom: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    /// Whether the named axiom passed; panics if it was never checked.
    pub fn passes(&self, axiom: &str) -> bool {
        let e = self.entry(axiom).unwrap_or_else(|| panic!("axiom {axiom:?} not in report {}", self.subject));
        e.status != Status::Fail
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.entries.iter().filter(|e| e.status == Status::Fail).map(|e| e.axiom.as_str()).collect()
    }

    pub fn summary(&self) -> String {
        match self.entries.iter().find(|e| e.status == Status::Fail) {
            None => format!("{}: all axioms hold", self.subject),
            Some(e) => {
                let mut s = format!("{}: {} fails", self.subject, e.axiom);
                if let Some(c) = &e.counterexample {
                    let _ = write!(s, " at ({}): {} != {}", c.inputs.join(", "), c.lhs, c.rhs);
                }
                if let Some(n) = &e.note {
                    let _ = write!(s, " ({n})");
                }
                s
            }
        }
    }

    pub fn into_result(self) -> Result<(), Error> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::Axiom(Box::new(self)))
        }
    }

    /// Records a verdict computed elsewhere.
    pub fn record(&mut self, axiom: &str, ok: bool, note: Option<String>) {
        self.entries.push(AxiomEntry {
            axiom: axiom.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            checked: 1,
            counterexample: None,
            note,
        });
    }

    pub fn skip(&mut self, axiom: &str, why: &str) {
        self.entries.push(AxiomEntry {
            axiom: axiom.to_string(),
            status: Status::Skipped,
            checked: 0,
            counterexample: None,
            note: Some(why.to_string()),
        });
    }

    /// Copies the entries of a sub-report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            e.axiom = format!("{prefix}{}", e.axiom);
            self.entries.push(e);
        }
    }

    /// Checks an identity on every selected tuple of basis indices.
    ///
    /// `labels` gives the basis labels of each tuple position; `check`
    /// returns the two rendered sides when the identity fails. Tuples are
    /// visited in parallel but the reported counterexample is always the
    /// lexicographically first failure.
    pub fn axiom<F>(&mut self, axiom: &str, mode: CheckMode, labels: &[&[String]], check: F)
    where
        F: Fn(&[usize]) -> Option<(String, String)> + Sync,
    {
        let dims: Vec<u64> = labels.iter().map(|l| l.len() as u64).collect();
        let total: u64 = dims.iter().product();
        let decode = |mut t: u64| {
            let mut tuple = vec![0usize; dims.len()];
            for k in (0..dims.len()).rev() {
                tuple[k] = (t % dims[k]) as usize;
                t /= dims[k];
            }
            tuple
        };
        let failure = (0..total)
            .into_par_iter()
            .filter(|&t| mode.selects(t))
            .find_map_first(|t| {
                let tuple = decode(t);
                check(&tuple).map(|sides| (tuple, sides))
            });
        let checked = match mode {
            CheckMode::Full => total,
            _ => (0..total).into_par_iter().filter(|&t| mode.selects(t)).count() as u64,
        };
        let counterexample = failure.map(|(tuple, (lhs, rhs))| Counterexample {
            inputs: tuple.iter().zip(labels).map(|(&i, l)| l[i].clone()).collect(),
            lhs,
            rhs,
        });
        self.entries.push(AxiomEntry {
            axiom: axiom.to_string(),
            status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
            checked,
            counterexample,
            note: None,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} [{}] {} ms\n", self.subject, self.mode, self.elapsed_ms);
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let _ = write!(s, "  {tag:4} {} ({} checked)", e.axiom, e.checked);
            if let Some(c) = &e.counterexample {
                let _ = write!(s, " at ({}): {} != {}", c.inputs.join(", "), c.lhs, c.rhs);
            }
            if let Some(n) = &e.note {
                let _ = write!(s, " [{n}]");
            }
            s.push('\n');
        }
        s
    }
}

/// `None` when the two vectors agree, otherwise both rendered with `labels`.
pub fn differ(lhs: &SparseVec, rhs: &SparseVec, labels: &[String]) -> Option<(String, String)> {
    (lhs != rhs).then(|| (lhs.render(labels), rhs.render(labels)))
}
