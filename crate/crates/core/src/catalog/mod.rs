//! The compiled-in table of classified families.

mod data;
mod models;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use models::model;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Contraction {
    QuadricFibration,
    P1Bundle,
    PnBundle,
    QuadricBundle,
    PointBlowup,
    /// Already Fano; no contraction needed.
    Fano,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnticanonicalMap {
    Ample,
    Small,
    Divisorial,
}

macro_rules! snake_names {
    ($ty:ty { $($variant:ident => $name:literal),* $(,)? }) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self { $(<$ty>::$variant => $name),* }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

snake_names!(Contraction {
    QuadricFibration => "quadric_fibration",
    P1Bundle => "p1_bundle",
    PnBundle => "pn_bundle",
    QuadricBundle => "quadric_bundle",
    PointBlowup => "point_blowup",
    Fano => "fano",
});

snake_names!(AnticanonicalMap {
    Ample => "ample",
    Small => "small",
    Divisorial => "divisorial",
});

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub id: String,
    pub dim: u32,
    pub degree: i64,
    pub picard: u32,
    pub index: u32,
    pub contraction: Contraction,
    pub anticanonical_map: AnticanonicalMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flop_partner: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smoothing: Option<String>,
    pub citation: String,
    pub notes: String,
}

impl FamilyRecord {
    /// Threefolds of Picard number two with a small anticanonical map: the
    /// families that have a flop and a smoothing.
    pub fn is_small_rank_two_threefold(&self) -> bool {
        self.dim == 3 && self.picard == 2 && self.anticanonical_map == AnticanonicalMap::Small
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            _ => Err(format!("unknown export format {s:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("malformed catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
}

pub const CSV_COLUMNS: [&str; 11] = [
    "id",
    "dim",
    "degree",
    "picard",
    "index",
    "contraction",
    "anticanonical_map",
    "flop_partner",
    "smoothing",
    "citation",
    "notes",
];

/// An ordered set of records (sorted by id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    records: Vec<FamilyRecord>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog::from_records(data::records())
    }

    pub fn from_records(mut records: Vec<FamilyRecord>) -> Catalog {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        Catalog { records }
    }

    pub fn records(&self) -> &[FamilyRecord] {
        &self.records
    }

    pub fn into_records(self) -> Vec<FamilyRecord> {
        self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Look up by id, or by a `V_{2,d}` alias for the smooth del Pezzo
    /// threefolds of Picard number one.
    pub fn lookup(&self, key: &str) -> Option<&FamilyRecord> {
        let id = resolve_alias(key).unwrap_or_else(|| key.to_string());
        self.records
            .binary_search_by(|r| r.id.as_str().cmp(&id))
            .ok()
            .map(|i| &self.records[i])
    }

    pub fn get_mut(&mut self, id: &str) -> Option<&mut FamilyRecord> {
        self.records.iter_mut().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.records)
            .expect("records always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let records: Vec<FamilyRecord> = serde_json::from_str(text)?;
        Ok(Catalog::from_records(records))
    }

    pub fn to_csv(&self) -> Result<String, CatalogError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS)?;
        for r in &self.records {
            let dim = r.dim.to_string();
            let degree = r.degree.to_string();
            let picard = r.picard.to_string();
            let index = r.index.to_string();
            w.write_record([
                r.id.as_str(),
                &dim,
                &degree,
                &picard,
                &index,
                r.contraction.as_str(),
                r.anticanonical_map.as_str(),
                r.flop_partner.as_deref().unwrap_or(""),
                r.smoothing.as_deref().unwrap_or(""),
                &r.citation,
                &r.notes,
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("all fields are UTF-8"))
    }

    pub fn export(&self, format: ExportFormat) -> Result<Vec<u8>, CatalogError> {
        Ok(match format {
            ExportFormat::Json => self.to_json().into_bytes(),
            ExportFormat::Csv => self.to_csv()?.into_bytes(),
        })
    }
}

/// `V_{2,d}` (also `V2,d`) for `1 <= d <= 5`.
pub fn resolve_alias(key: &str) -> Option<String> {
    let inner = key
        .strip_prefix("V_{2,")
        .and_then(|s| s.strip_suffix('}'))
        .or_else(|| key.strip_prefix("V2,"))?;
    let d: u32 = inner.parse().ok()?;
    (1..=5).contains(&d).then(|| format!("thm2.1-{d}"))
}

/// The alias of a record, if it has one.
pub fn alias_of(id: &str) -> Option<String> {
    let d: u32 = id.strip_prefix("thm2.1-")?.parse().ok()?;
    (1..=5).contains(&d).then(|| format!("V_{{2,{d}}}"))
}

pub fn builtin_catalog() -> Vec<FamilyRecord> {
    Catalog::builtin().into_records()
}

pub fn lookup(key: &str) -> Option<FamilyRecord> {
    Catalog::builtin().lookup(key).cloned()
}

pub fn export(format: ExportFormat) -> Result<Vec<u8>, CatalogError> {
    Catalog::builtin().export(format)
}
