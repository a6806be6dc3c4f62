//! Finite searches that rebuild the classification lists from their
//! numerical conditions. Rejected cases are returned as [`Exclusion`]s, not
//! dropped, so negative results stay testable.

mod highdim;
mod quadric;
mod threefolds;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bundle::{BundleError, SectionCount, SplitBundle};
use crate::chow::{BaseKind, ChowError};
use crate::construction::{Construction, ModelError};

pub use highdim::enumerate_highdim;
pub use quadric::{
    classify_tuple, enumerate_quadric_fibrations, quadric_fibrations_in_window, small_verdicts,
    TupleVerdict, Verdict,
};
pub use threefolds::{enumerate_p2_bundles, enumerate_point_blowups, enumerate_rho3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("expected a rank-4 bundle, got rank {0}")]
    WrongRank(usize),
    #[error("{0} is not P1xP1 or F2")]
    UnsupportedSurface(BaseKind),
    #[error("dimension {0} is below 4")]
    DimensionTooSmall(u32),
    #[error("{label}: degree routes disagree ({first} vs {second})")]
    DegreeMismatch {
        label: String,
        first: i64,
        second: i64,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl From<BundleError> for EnumerateError {
    fn from(e: BundleError) -> Self {
        EnumerateError::Model(e.into())
    }
}

impl From<ChowError> for EnumerateError {
    fn from(e: ChowError) -> Self {
        EnumerateError::Model(e.into())
    }
}

pub type Result<T, E = EnumerateError> = std::result::Result<T, E>;

/// A family produced by a search, with its invariants recomputed from the
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCandidate {
    pub label: String,
    pub construction: Construction,
    pub degree: i64,
    pub dim: u32,
    pub picard: u32,
    pub h0: Option<SectionCount>,
    /// Catalog id of the flop partner, when the search knows it.
    pub partner: Option<String>,
    /// False for the degree-one families, whose `|H|` has a base point.
    pub spanned: bool,
    pub notes: Vec<String>,
}

impl FamilyCandidate {
    pub(crate) fn from_construction(label: impl Into<String>, construction: Construction) -> Result<Self> {
        let e = construction.evaluate()?;
        let picard = e.picard.ok_or_else(|| {
            ModelError::Invalid(format!("{construction}: Picard number unknown"))
        })?;
        Ok(FamilyCandidate {
            label: label.into(),
            degree: e.degree,
            dim: e.dim,
            picard,
            h0: e.h0,
            partner: None,
            spanned: e.degree > 1,
            notes: Vec::new(),
            construction,
        })
    }

    pub(crate) fn with_partner(mut self, partner: Option<&str>) -> Self {
        self.partner = partner.map(Into::into);
        self
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn key(&self) -> String {
        self.construction.key()
    }
}

#[derive(Serialize)]
struct CandidateView<'a> {
    label: &'a str,
    construction: String,
    key: String,
    dim: u32,
    degree: i64,
    picard: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    h0: Option<SectionCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partner: Option<&'a str>,
    spanned: bool,
    notes: &'a [String],
}

impl Serialize for FamilyCandidate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CandidateView {
            label: &self.label,
            construction: self.construction.to_string(),
            key: self.key(),
            dim: self.dim,
            degree: self.degree,
            picard: self.picard,
            h0: self.h0,
            partner: self.partner.as_deref(),
            spanned: self.spanned,
            notes: &self.notes,
        }
        .serialize(s)
    }
}

/// A case ruled out by the search, with the numbers that rule it out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub label: String,
    pub reason: String,
    pub values: Vec<(String, i64)>,
    pub citation: String,
}

impl Exclusion {
    pub(crate) fn new(label: impl Into<String>, reason: impl Into<String>, citation: &str) -> Self {
        Exclusion {
            label: label.into(),
            reason: reason.into(),
            values: Vec::new(),
            citation: citation.into(),
        }
    }

    pub(crate) fn value(mut self, name: &str, v: i64) -> Self {
        self.values.push((name.into(), v));
        self
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.values.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub candidates: Vec<FamilyCandidate>,
    pub exclusions: Vec<Exclusion>,
}

impl Enumeration {
    pub fn degrees(&self) -> Vec<i64> {
        self.candidates.iter().map(|c| c.degree).collect()
    }

    pub fn exclusion(&self, label: &str) -> Option<&Exclusion> {
        self.exclusions.iter().find(|e| e.label == label)
    }
}

/// The searches available from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Quadric,
    P2Bundle,
    Blowup,
    Rho3,
    HighDim,
}

impl std::str::FromStr for Case {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "quadric" => Case::Quadric,
            "p2bundle" => Case::P2Bundle,
            "blowup" => Case::Blowup,
            "rho3" => Case::Rho3,
            "highdim" => Case::HighDim,
            _ => return Err(format!("unknown case {s:?}")),
        })
    }
}

pub(crate) fn split(a: &[i64]) -> SplitBundle {
    SplitBundle::new(a.to_vec()).expect("nonempty")
}
