//! Closes the loop between the searches and the catalog: both sides are
//! keyed by construction data and compared as sets.

use std::collections::BTreeMap;

use super::{Check, Report};
use crate::catalog::{self, Catalog};
use crate::chow::BaseKind;
use crate::enumerate::{
    enumerate_highdim, enumerate_p2_bundles, enumerate_point_blowups, enumerate_rho3,
    small_verdicts, Enumeration, Result as EnumResult,
};

#[derive(Debug, Clone)]
struct Entry {
    label: String,
    degree: i64,
    partner: Option<String>,
}

struct Group {
    name: &'static str,
    prefix: &'static str,
    citation: &'static str,
    entries: Result<BTreeMap<String, Entry>, String>,
}

fn entries(e: EnumResult<Enumeration>) -> Result<BTreeMap<String, Entry>, String> {
    let e = e.map_err(|e| e.to_string())?;
    Ok(e.candidates
        .into_iter()
        .map(|c| {
            let entry = Entry {
                label: c.label.clone(),
                degree: c.degree,
                partner: c.partner.clone(),
            };
            (c.key(), entry)
        })
        .collect())
}

/// Search results, computed once.
pub struct EnumerationSnapshot {
    groups: Vec<Group>,
    highdim: Vec<(u32, Result<Vec<String>, String>)>,
}

impl EnumerationSnapshot {
    pub fn compute() -> EnumerationSnapshot {
        let quadric = small_verdicts()
            .into_iter()
            .map(|v| {
                let partner = match &v.verdict {
                    crate::enumerate::Verdict::Small { partner, .. } => Some(partner.clone()),
                    _ => None,
                };
                let entry = Entry {
                    label: v.label(),
                    degree: v.degree,
                    partner,
                };
                (v.construction().key(), entry)
            })
            .collect();
        let groups = vec![
            Group {
                name: "quadric fibrations",
                prefix: "thm3.4-",
                citation: "Theorem 3.4",
                entries: Ok(quadric),
            },
            Group {
                name: "P1-bundles over P2",
                prefix: "thm3.5-",
                citation: "Theorem 3.5",
                entries: entries(enumerate_p2_bundles()),
            },
            Group {
                name: "point blow-ups",
                prefix: "thm3.6-",
                citation: "Theorem 3.6",
                entries: entries(enumerate_point_blowups()),
            },
            Group {
                name: "P1-bundles over P1xP1",
                prefix: "thm4.1-2-p1p1-",
                citation: "Theorem 4.1(2)",
                entries: entries(enumerate_rho3(BaseKind::P1xP1)),
            },
            Group {
                name: "P1-bundles over F2",
                prefix: "thm4.1-2-f2-",
                citation: "Theorem 4.1(2)",
                entries: entries(enumerate_rho3(BaseKind::Hirzebruch(2))),
            },
        ];
        let highdim = [4, 5]
            .into_iter()
            .map(|n| {
                let keys = enumerate_highdim(n)
                    .map(|e| e.candidates.iter().map(|c| c.key()).collect())
                    .map_err(|e| e.to_string());
                (n, keys)
            })
            .collect();
        EnumerationSnapshot { groups, highdim }
    }

    pub fn compare(&self, catalog: &Catalog) -> Report {
        let mut report = Report::default();
        for g in &self.groups {
            compare_group(g, catalog, &mut report);
        }
        for r in catalog.records().iter().filter(|r| r.id.starts_with("thm5.8-")) {
            let Some((_, keys)) = self.highdim.iter().find(|(n, _)| *n == r.dim) else {
                report.push(Check::new("enumerated", &r.id, format!("dimension {}", r.dim), "not searched", false, &r.citation));
                continue;
            };
            let key = catalog::model(&r.id).map(|c| c.key());
            let found = match (keys, &key) {
                (Ok(keys), Some(k)) => keys.contains(k),
                _ => false,
            };
            report.push(Check::new(
                "enumerated",
                &r.id,
                key.unwrap_or_else(|| "a model".into()),
                if found { "found" } else { "missing" },
                found,
                &r.citation,
            ));
        }
        report
    }
}

fn compare_group(g: &Group, catalog: &Catalog, report: &mut Report) {
    let entries = match &g.entries {
        Ok(e) => e,
        Err(e) => {
            report.push(Check::new("enumeration_runs", g.name, "ok", e.clone(), false, g.citation));
            return;
        }
    };
    let records: Vec<_> = catalog.records().iter().filter(|r| r.id.starts_with(g.prefix)).collect();
    let mut matched = 0;
    let mut seen = Vec::new();
    for r in &records {
        let Some(model) = catalog::model(&r.id) else {
            report.push(Check::new("enumerated", &r.id, "a model", "none", false, &r.citation));
            continue;
        };
        let key = model.key();
        let Some(entry) = entries.get(&key) else {
            report.push(Check::new("enumerated", &r.id, key, "missing", false, &r.citation));
            continue;
        };
        matched += 1;
        seen.push(key.clone());
        report.push(Check::new("enumerated", &r.id, key, entry.label.clone(), true, &r.citation));
        report.push(Check::equal("enumerated_degree", &r.id, r.degree, entry.degree, &r.citation));
        if let Some(p) = &entry.partner {
            report.push(Check::equal(
                "enumerated_partner",
                &r.id,
                p,
                r.flop_partner.as_deref().unwrap_or("none"),
                &r.citation,
            ));
        }
    }
    for (key, entry) in entries {
        if !seen.contains(key) {
            report.push(Check::new(
                "in_catalog",
                g.name,
                key.clone(),
                format!("{} has no record", entry.label),
                false,
                g.citation,
            ));
        }
    }
    report.push(Check::new(
        "set_equality",
        g.name,
        format!("{} enumerated", entries.len()),
        format!("{} of {} records matched", matched, records.len()),
        matched == entries.len() && matched == records.len(),
        g.citation,
    ));
}

pub fn verify_enumeration_matches_catalog() -> Report {
    EnumerationSnapshot::compute().compare(&Catalog::builtin())
}
