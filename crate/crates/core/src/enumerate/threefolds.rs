//! Threefold searches: `P1`-bundles over `P2`, point blow-ups of the
//! Picard-one del Pezzo threefolds, and `P1`-bundles over `P1xP1` / `F2`.

use super::{Enumeration, EnumerateError, Exclusion, FamilyCandidate, Result};
use crate::bundle::{blowup_degree, chi_rank2, twist_rank2, Rank2Data};
use crate::catalog::builtin_catalog;
use crate::chow::{Ambient, BaseKind};
use crate::construction::{anticanonical, Construction};

const P2_CITATION: &str = "Theorem 3.5";
const BLOWUP_CITATION: &str = "Theorem 3.6";
const RHO3_CITATION: &str = "Theorem 4.1(2)";

/// Partners named in the list of `P1`-bundles over `P2`.
fn p2_partner(c2: i64) -> Option<&'static str> {
    match c2 {
        2 => Some("thm3.4-4"),
        3 => Some("thm3.6-4"),
        4 => Some("thm3.5-3"),
        5 => Some("thm3.5-4"),
        _ => None,
    }
}

/// `P(F)` over `P2` with `-K = 2(z + 2h)`.
///
/// Writing `-K = 2z + (3 - c1)h` for normalized `c1 in {0, -1}` forces
/// `c1 = -1`. Then `h^0(H) = chi(F(2)) = 9 - c2` must lie in `3..=7`, and the
/// degree `7 - c2` must be at least 2.
pub fn enumerate_p2_bundles() -> Result<Enumeration> {
    let mut out = Enumeration::default();
    for c1 in [0i64, -1] {
        if (3 - c1) % 2 != 0 {
            out.exclusions.push(
                Exclusion::new(
                    format!("c1={c1}"),
                    "-K = 2z + (3 - c1)h is not divisible by 2",
                    P2_CITATION,
                )
                .value("3 - c1", 3 - c1),
            );
        }
    }
    let p2 = Ambient::base(BaseKind::P2);
    let two_h = p2.divisor("2h")?;
    for c2 in 0..=8 {
        let f = Rank2Data::parse(BaseKind::P2, "-h", c2)?;
        let chi = chi_rank2(&twist_rank2(&f, &two_h)?)?;
        let construction = Construction::P1BundleP2 { c2 };
        let degree = construction.evaluate()?.degree;
        let label = format!("c2={c2}");
        if !(3..=7).contains(&chi) {
            out.exclusions.push(
                Exclusion::new(&label, "chi(F(2)) outside the window 3..=7", P2_CITATION)
                    .value("chi(F(2))", chi)
                    .value("d", degree),
            );
            continue;
        }
        if degree < 2 {
            out.exclusions.push(
                Exclusion::new(&label, "degree 7 - c2 below 2", P2_CITATION)
                    .value("chi(F(2))", chi)
                    .value("d", degree),
            );
            continue;
        }
        let cand = FamilyCandidate::from_construction(format!("P2 bundle {label}"), construction)?
            .with_partner(p2_partner(c2))
            .note(format!("chi(F(2)) = {chi}"));
        out.candidates.push(cand);
    }
    Ok(out)
}

fn blowup_partner(d: i64) -> Option<&'static str> {
    match d {
        1 => Some("thm3.6-1"),
        2 => Some("thm3.6-2"),
        3 => Some("thm3.4-2"),
        4 => Some("thm3.5-2"),
        _ => None,
    }
}

/// `Bl_p(Y)` for `Y` a smooth del Pezzo threefold of Picard number one and
/// degree `d + 1`, taken from the catalog.
pub fn enumerate_point_blowups() -> Result<Enumeration> {
    let bases: Vec<i64> = builtin_catalog()
        .into_iter()
        .filter(|r| r.id.starts_with("thm2.1-") && r.dim == 3 && r.picard == 1)
        .map(|r| r.degree)
        .collect();
    let mut out = Enumeration::default();
    for d in 1..=7 {
        let label = format!("d={d}");
        if !bases.contains(&(d + 1)) {
            out.exclusions.push(
                Exclusion::new(
                    &label,
                    format!("no del Pezzo threefold of degree {} and Picard number 1", d + 1),
                    BLOWUP_CITATION,
                )
                .value("base degree", d + 1),
            );
            continue;
        }
        if d > 5 {
            out.exclusions.push(
                Exclusion::new(&label, "outside the window 1 <= d <= 5", "Corollary 3.3")
                    .value("base degree", d + 1)
                    .value("d", d),
            );
            continue;
        }
        let step = blowup_degree(3, d + 1)?;
        if step.degree != d {
            return Err(EnumerateError::DegreeMismatch {
                label,
                first: step.degree,
                second: d,
            });
        }
        let cand = FamilyCandidate::from_construction(
            format!("Bl_p V_{{2,{}}}", d + 1),
            Construction::BlowupV2 { base_degree: d + 1 },
        )?
        .with_partner(blowup_partner(d));
        out.candidates.push(cand);
    }
    Ok(out)
}

/// A twist making `c2` negative when `c2(F) = 1`.
fn destabilizing_twist(surface: BaseKind) -> &'static str {
    match surface {
        BaseKind::P1xP1 => "-f1 - 2*f2",
        _ => "-C0 - 3*f",
    }
}

/// `P(F)` over `S = P1xP1` or `F2` with `c1(F) = -K_S`, so `H = z` and
/// `H^3 = 8 - c2`.
pub fn enumerate_rho3(surface: BaseKind) -> Result<Enumeration> {
    if !matches!(surface, BaseKind::P1xP1 | BaseKind::Hirzebruch(2)) {
        return Err(EnumerateError::UnsupportedSurface(surface));
    }
    let c1 = anticanonical(surface)?;
    let mut out = Enumeration::default();
    for c2 in 0..=8 {
        let f = Rank2Data::new(surface, c1.clone(), c2)?;
        let label = format!("{surface} c2={c2}");
        if c2 == 1 {
            let m = Ambient::base(surface).divisor(destabilizing_twist(surface))?;
            let twisted = twist_rank2(&f, &m)?;
            out.exclusions.push(
                Exclusion::new(
                    &label,
                    format!(
                        "F({}) has sections vanishing in codimension 2 but c2 < 0",
                        m
                    ),
                    RHO3_CITATION,
                )
                .value("c2", c2)
                .value("c2(F(M))", twisted.c2()),
            );
            continue;
        }
        let chern_degree = f.degree()?;
        if chern_degree <= 0 {
            out.exclusions.push(
                Exclusion::new(&label, "H not big: c1^2 <= c2", RHO3_CITATION)
                    .value("c1^2", f.c1_squared()?)
                    .value("c2", c2),
            );
            continue;
        }
        let construction = Construction::Rho3Bundle {
            surface,
            c2,
            ruling_pair: c2 >= 2,
        };
        let mut cand = FamilyCandidate::from_construction(label.clone(), construction)?;
        if cand.degree != chern_degree {
            return Err(EnumerateError::DegreeMismatch {
                label,
                first: cand.degree,
                second: chern_degree,
            });
        }
        if c2 == 0 {
            cand = cand.note("split: F = -K_S + O_S");
        } else {
            cand = cand.note("two points of Z on a ruling line, the rest general");
        }
        if c2 == 2 && surface == BaseKind::P1xP1 {
            cand = cand.note("uniform split subcase F = O(1,2) + O(1,0)");
        }
        if cand.degree == 1 {
            cand = cand.note("|H| has a base point");
        }
        if surface != BaseKind::P1xP1 {
            cand = cand.note("mirrors P1xP1 (omitted in the source argument)");
        }
        out.candidates.push(cand);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_bundles() {
        let e = enumerate_p2_bundles().unwrap();
        assert_eq!(e.degrees(), [5, 4, 3, 2]);
        assert_eq!(e.candidates[0].partner.as_deref(), Some("thm3.4-4"));
        assert_eq!(e.candidates[3].partner.as_deref(), Some("thm3.5-4"));
        let six = e.exclusion("c2=6").unwrap();
        assert_eq!((six.get("chi(F(2))"), six.get("d")), (Some(3), Some(1)));
        assert_eq!(e.exclusion("c1=0").unwrap().get("3 - c1"), Some(3));
    }

    #[test]
    fn point_blowups() {
        let e = enumerate_point_blowups().unwrap();
        assert_eq!(e.degrees(), [1, 2, 3, 4]);
        assert_eq!(e.candidates[2].partner.as_deref(), Some("thm3.4-2"));
        assert_eq!(e.exclusion("d=5").unwrap().get("base degree"), Some(6));
        assert!(e.exclusion("d=7").is_some());
    }

    #[test]
    fn rho3_both_surfaces() {
        for s in [BaseKind::P1xP1, BaseKind::Hirzebruch(2)] {
            let e = enumerate_rho3(s).unwrap();
            assert_eq!(e.degrees(), [8, 6, 5, 4, 3, 2, 1]);
            let one = e.exclusion(&format!("{s} c2=1")).unwrap();
            assert_eq!(one.get("c2(F(M))"), Some(-1));
            assert!(e.candidates[0].notes[0].starts_with("split"));
            assert!(!e.candidates[6].spanned);
        }
        assert_eq!(
            enumerate_rho3(BaseKind::P2),
            Err(EnumerateError::UnsupportedSurface(BaseKind::P2))
        );
    }
}
