//! Flop partners and smoothings: the links between records.

use super::{Check, Report};
use crate::catalog::{AnticanonicalMap, Catalog, Contraction};

const FLOP: &str = "Theorem 3.2";
const SELF_FLOP: &str = "Lemma 3.1";
const SMOOTHING: &str = "Theorem 3.2";

pub fn verify_flops(catalog: &Catalog) -> Report {
    let mut report = Report::default();
    for r in catalog.records() {
        let id = r.id.as_str();
        if r.is_small_rank_two_threefold() {
            report.push(Check::new(
                "flop_partner_present",
                id,
                "a partner id",
                r.flop_partner.clone().unwrap_or_else(|| "none".into()),
                r.flop_partner.is_some(),
                &r.citation,
            ));
            if r.degree <= 2 {
                report.push(Check::equal(
                    "flop_self_low_degree",
                    id,
                    id,
                    r.flop_partner.as_deref().unwrap_or("none"),
                    SELF_FLOP,
                ));
            }
        }
        let Some(partner_id) = &r.flop_partner else {
            continue;
        };
        let Some(p) = catalog.records().iter().find(|x| &x.id == partner_id) else {
            report.push(Check::new(
                "flop_partner_resolves",
                id,
                partner_id.clone(),
                "no such record",
                false,
                &r.citation,
            ));
            continue;
        };
        report.push(Check::new("flop_partner_resolves", id, partner_id.clone(), p.id.clone(), true, &r.citation));
        report.push(Check::equal(
            "flop_symmetry",
            id,
            id,
            p.flop_partner.as_deref().unwrap_or("none"),
            &p.citation,
        ));
        report.push(Check::equal("flop_degree", id, r.degree, p.degree, FLOP));
        report.push(Check::equal("flop_index", id, r.index, p.index, FLOP));
        report.push(Check::equal("flop_dim", id, r.dim, p.dim, FLOP));
    }
    report
}

pub fn verify_smoothings(catalog: &Catalog) -> Report {
    let mut report = Report::default();
    for r in catalog.records() {
        let id = r.id.as_str();
        if r.is_small_rank_two_threefold() {
            report.push(Check::new(
                "smoothing_present",
                id,
                "a smoothing id",
                r.smoothing.clone().unwrap_or_else(|| "none".into()),
                r.smoothing.is_some(),
                &r.citation,
            ));
        }
        let Some(target_id) = &r.smoothing else {
            continue;
        };
        let Some(t) = catalog.records().iter().find(|x| &x.id == target_id) else {
            report.push(Check::new(
                "smoothing_resolves",
                id,
                target_id.clone(),
                "no such record",
                false,
                &r.citation,
            ));
            continue;
        };
        report.push(Check::new("smoothing_resolves", id, target_id.clone(), t.id.clone(), true, &r.citation));
        let smooth_fano = t.contraction == Contraction::Fano && t.anticanonical_map == AnticanonicalMap::Ample;
        report.push(Check::new(
            "smoothing_target_fano",
            id,
            "fano/ample",
            format!("{}/{}", t.contraction, t.anticanonical_map),
            smooth_fano,
            &t.citation,
        ));
        report.push(Check::equal("smoothing_degree", id, r.degree, t.degree, SMOOTHING));
        report.push(Check::equal("smoothing_index", id, r.index, t.index, SMOOTHING));
        // The smoothing deforms the anticanonical model, which loses the
        // classes contracted by a non-trivial anticanonical map.
        let expected_picard = match r.anticanonical_map {
            AnticanonicalMap::Ample => r.picard,
            _ => r.picard.saturating_sub(1),
        };
        report.push(Check::equal("smoothing_picard", id, expected_picard, t.picard, SMOOTHING));
        if r.anticanonical_map == AnticanonicalMap::Small {
            report.push(Check::new(
                "smoothing_degree_window",
                id,
                "1..=5",
                t.degree.to_string(),
                (1..=5).contains(&t.degree),
                "Corollary 3.3",
            ));
        }
    }
    report
}
