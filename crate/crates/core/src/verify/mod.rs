//! Cross-checks of the catalog against recomputation.
//!
//! Every check records what was expected and what was computed. Checks
//! that need geometry this crate cannot model are `skipped` with a reason,
//! never passed.

mod family;
mod links;
mod matching;
pub mod mutation;
mod towers;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::Catalog;

pub use family::{verify_family, EvaluationCache};
pub use links::{verify_flops, verify_smoothings};
pub use matching::{verify_enumeration_matches_catalog, EnumerationSnapshot};
pub use towers::{verify_constructions, verify_constructions_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub citation: String,
}

impl Check {
    /// Passes when the two printed values agree exactly.
    pub fn equal(
        name: &str,
        subject: &str,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
        citation: &str,
    ) -> Check {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let ok = expected == computed;
        Check::new(name, subject, expected, computed, ok, citation)
    }

    pub fn new(
        name: &str,
        subject: &str,
        expected: impl Into<String>,
        computed: impl Into<String>,
        ok: bool,
        citation: &str,
    ) -> Check {
        Check {
            name: name.into(),
            subject: subject.into(),
            expected: expected.into(),
            computed: computed.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            reason: None,
            citation: citation.into(),
        }
    }

    pub fn skipped(name: &str, subject: &str, reason: impl Into<String>, citation: &str) -> Check {
        Check {
            name: name.into(),
            subject: subject.into(),
            expected: String::new(),
            computed: String::new(),
            status: Status::Skipped,
            reason: Some(reason.into()),
            citation: citation.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn is_green(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, name: &str, subject: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name && c.subject == subject)
    }

    /// Sort checks by subject, then name, so output does not depend on the
    /// order the checks ran in.
    pub fn canonicalize(mut self) -> Report {
        self.checks.sort_by(|a, b| {
            (&a.subject, &a.name, &a.expected, &a.computed)
                .cmp(&(&b.subject, &b.name, &b.expected, &b.computed))
        });
        self.notes.sort();
        self.notes.dedup();
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "{status:<5}{:<24}{:<28}", c.subject, c.name)?;
            match &c.reason {
                Some(r) => write!(f, "{r}")?,
                None => write!(f, "expected {}, computed {}", c.expected, c.computed)?,
            }
            writeln!(f, "  [{}]", c.citation)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(
            f,
            "{} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        )
    }
}

/// The groups of checks that can be run separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Families,
    Flops,
    Smoothings,
    Constructions,
    Enumeration,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Families,
        Section::Flops,
        Section::Smoothings,
        Section::Constructions,
        Section::Enumeration,
    ];
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "families" => Section::Families,
            "flops" => Section::Flops,
            "smoothings" => Section::Smoothings,
            "constructions" => Section::Constructions,
            "enumeration" => Section::Enumeration,
            _ => return Err(format!("unknown report {s:?}")),
        })
    }
}

/// Runs checks against any catalog, reusing model evaluations and
/// enumeration results across runs (the mutation sweep runs hundreds).
pub struct Verifier {
    cache: EvaluationCache,
    snapshot: EnumerationSnapshot,
}

impl Verifier {
    pub fn new() -> Verifier {
        Verifier {
            cache: EvaluationCache::builtin(),
            snapshot: EnumerationSnapshot::compute(),
        }
    }

    pub fn verify(&self, catalog: &Catalog) -> Report {
        self.verify_sections(catalog, &Section::ALL)
    }

    pub fn verify_sections(&self, catalog: &Catalog, sections: &[Section]) -> Report {
        let mut report = Report::default();
        for s in sections {
            match s {
                Section::Families => {
                    for r in catalog.records() {
                        report.extend(self.cache.verify_family(r));
                    }
                }
                Section::Flops => report.extend(verify_flops(catalog)),
                Section::Smoothings => report.extend(verify_smoothings(catalog)),
                Section::Constructions => report.extend(verify_constructions_with(catalog)),
                Section::Enumeration => report.extend(self.snapshot.compare(catalog)),
            }
        }
        report.canonicalize()
    }
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new()
    }
}

/// Every check over the built-in catalog.
pub fn verify_all() -> Report {
    Verifier::new().verify(&Catalog::builtin())
}
