//! Dimension `n >= 4`: `P_(n-2)`-bundles over surfaces, quadric bundles over
//! `P1`, and chains of point blow-ups on top of either.

use super::threefolds::{enumerate_p2_bundles, enumerate_rho3};
use super::{Enumeration, EnumerateError, Exclusion, FamilyCandidate, Result};
use crate::bundle::{twist_rank2, Rank2Data};
use crate::catalog;
use crate::chow::{Ambient, BaseKind};
use crate::construction::{Construction, TowerModel};

const EXTENSION: &str = "0 -> O^(n-3) -> F -> F' -> 0";

struct Source {
    label: String,
    bundle: Rank2Data,
    /// Degree obtained through the threefold model, if there is one.
    threefold_degree: Option<i64>,
    note: Option<&'static str>,
}

/// `F' = F(2)` for a bundle over `P2` normalized to `c1 = -1`, so that
/// `c1(F') = -K_P2`.
fn p2_source(label: String, c2: i64) -> Result<Source> {
    let f = Rank2Data::parse(BaseKind::P2, "-h", c2)?;
    let bundle = twist_rank2(&f, &Ambient::base(BaseKind::P2).divisor("2h")?)?;
    Ok(Source {
        label,
        bundle,
        threefold_degree: Some(Construction::P1BundleP2 { c2 }.evaluate()?.degree),
        note: None,
    })
}

fn sources() -> Result<Vec<Source>> {
    let mut out = Vec::new();
    for cand in enumerate_p2_bundles()?.candidates {
        if let Construction::P1BundleP2 { c2 } = cand.construction {
            out.push(p2_source(cand.label, c2)?);
        }
    }
    for id in ["thm3.1-2a", "thm3.1-2b", "thm3.1-2c"] {
        if let Some(Construction::P1BundleP2 { c2 }) = catalog::model(id) {
            out.push(p2_source(id.to_string(), c2)?);
        }
    }
    let fano = [
        ("thm2.1-6a", BaseKind::P2, "3h", 3, Some("for n = 4 this is P2 x P2")),
        ("thm2.1-7", BaseKind::P2, "3h", 2, None),
        ("thm2.1-6b", BaseKind::P1xP1, "2*f1 + 2*f2", 2, None),
    ];
    for (id, surface, c1, c2, note) in fano {
        out.push(Source {
            label: id.to_string(),
            bundle: Rank2Data::parse(surface, c1, c2)?,
            threefold_degree: catalog::lookup(id).map(|r| r.degree),
            note,
        });
    }
    for surface in [BaseKind::P1xP1, BaseKind::Hirzebruch(2)] {
        for cand in enumerate_rho3(surface)?.candidates {
            if let Construction::Rho3Bundle { surface, c2, .. } = cand.construction {
                out.push(Source {
                    label: cand.label,
                    bundle: Rank2Data::new(surface, crate::construction::anticanonical(surface)?, c2)?,
                    threefold_degree: Some(cand.degree),
                    note: None,
                });
            }
        }
    }
    Ok(out)
}

fn bundle_candidates(n: u32) -> Result<Vec<FamilyCandidate>> {
    let mut out: Vec<FamilyCandidate> = Vec::new();
    for src in sources()? {
        let k_squared = src.bundle.c1_squared()?;
        let chern = k_squared - src.bundle.c2();
        let construction = Construction::PnBundle {
            n,
            bundle: src.bundle.clone(),
        };
        let mut cand = FamilyCandidate::from_construction(format!("P{} bundle from {}", n - 2, src.label), construction)?;
        for other in [Some(chern), src.threefold_degree].into_iter().flatten() {
            if other != cand.degree {
                return Err(EnumerateError::DegreeMismatch {
                    label: cand.label,
                    first: cand.degree,
                    second: other,
                });
            }
        }
        if cand.degree > 9 {
            continue;
        }
        if let Some(existing) = out.iter_mut().find(|c| c.key() == cand.key()) {
            existing.notes.push(format!("also from {}", src.label));
            continue;
        }
        cand = cand.note(EXTENSION);
        if let Some(note) = src.note {
            cand = cand.note(note);
        }
        if cand.degree == 1 {
            cand = cand.note("|H| has a simple base point");
        }
        out.push(cand);
    }
    Ok(out)
}

fn quadric_bundles(n: u32, out: &mut Enumeration) -> Result<()> {
    let mut push = |n, d, cone, label: &str| -> Result<()> {
        let c = Construction::QuadricBundleHighDim {
            n,
            d,
            cone_exception: cone,
        };
        out.candidates.push(FamilyCandidate::from_construction(label, c)?);
        Ok(())
    };
    match n {
        5 => push(5, 5, false, "quadric bundle (5,5)")?,
        4 => push(4, 5, false, "quadric bundle (4,5), hyperplane section of (5,5)")?,
        _ => {}
    }
    push(n, 5, true, "quadric bundle, cone case")?;
    if let Some(c) = out.candidates.last_mut() {
        c.notes.push("X' is a cone; second small resolution over P2".into());
    }
    if n == 4 {
        let p2 = excluded_tower(BaseKind::P2, "2h", "z + h")?;
        out.exclusions.push(
            Exclusion::new("(4,6)", "the case (n,d) = (4,6) does not occur", "Proposition 5.5")
                .value("n", 4)
                .value("d", p2),
        );
        let f1 = excluded_tower(BaseKind::Hirzebruch(1), "C0 + 2f", "z + C0 + f")?;
        out.exclusions.push(
            Exclusion::new(
                "(4,5) over F1",
                "the 9.14(6) case: the image is neither terminal nor Q-factorial",
                "Theorem 5.7",
            )
            .value("n", 4)
            .value("d", f1),
        );
    }
    Ok(())
}

/// Degree of `X~` in `P(O(twist) + O^3)` with `H = z`.
fn excluded_tower(base: BaseKind, twist: &str, divisor: &str) -> Result<i64> {
    let b = Ambient::base(base);
    let zero = crate::chow::ChowElement::zero(&b, 1);
    let ambient = Ambient::tower(base, &[b.divisor(twist)?, zero.clone(), zero.clone(), zero])?;
    let model = TowerModel {
        divisor: Some(ambient.divisor(divisor)?),
        polarization: ambient.zeta()?,
        discrepancy: None,
        cuts: 0,
        contracted_divisors: None,
        ambient,
    };
    Ok(model.degree()?)
}

/// Smooth del Pezzo `n`-folds of Picard number one.
fn del_pezzo_bases(n: u32) -> Vec<Construction> {
    (1..=5)
        .filter(|&d| d < 5 || n <= 6)
        .map(|d| Construction::DelPezzo { n, d, picard: 1 })
        .collect()
}

/// All candidates in dimension `n`: bundles, quadric bundles, then blow-up
/// chains of every base with `H^n > 1`.
pub fn enumerate_highdim(n: u32) -> Result<Enumeration> {
    if n < 4 {
        return Err(EnumerateError::DimensionTooSmall(n));
    }
    let mut out = Enumeration {
        candidates: bundle_candidates(n)?,
        exclusions: Vec::new(),
    };
    quadric_bundles(n, &mut out)?;
    let mut bases: Vec<(String, Construction, i64)> = out
        .candidates
        .iter()
        .map(|c| (c.label.clone(), c.construction.clone(), c.degree))
        .collect();
    for base in del_pezzo_bases(n) {
        let d = base.evaluate()?.degree;
        bases.push((format!("del Pezzo {n}-fold of degree {d}"), base, d));
    }
    for (label, base, d) in bases {
        for r in 1..d {
            let chain = Construction::PointBlowupChain {
                base: Box::new(base.clone()),
                points: u32::try_from(r).expect("small"),
            };
            let cand = FamilyCandidate::from_construction(format!("Bl_{r} [{label}]"), chain)?;
            out.candidates.push(cand);
        }
    }
    Ok(out)
}
