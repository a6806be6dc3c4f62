use crate::bundle::SplitBundle;
use crate::chow::{Ambient, BaseKind, ChowElement};
use crate::construction::{quintic_quadric_bundle_tower, Construction, Result, TowerModel};

fn quadric(a: [i64; 4], alpha: i64) -> Construction {
    Construction::QuadricFibration {
        bundle: SplitBundle::new(a.to_vec()).expect("rank 4"),
        alpha,
    }
}

/// `P(O(twist) + O^(rank-1))`.
fn split_tower(base: BaseKind, twist: &str, rank: usize) -> Result<Ambient> {
    let b = Ambient::base(base);
    let mut twists = vec![b.divisor(twist)?];
    twists.resize(rank, ChowElement::zero(&b, 1));
    Ok(Ambient::tower(base, &twists)?)
}

fn tower(
    ambient: Ambient,
    divisor: Option<&str>,
    polarization: &str,
    discrepancy: Option<&str>,
    contracted: Option<u32>,
) -> Result<Construction> {
    Ok(Construction::Tower(TowerModel {
        divisor: divisor.map(|x| ambient.divisor(x)).transpose()?,
        polarization: ambient.divisor(polarization)?,
        discrepancy: discrepancy.map(|x| ambient.divisor(x)).transpose()?,
        cuts: 0,
        contracted_divisors: contracted,
        ambient,
    }))
}

fn build(id: &str) -> Result<Option<Construction>> {
    let c = match id {
        "thm2.1-6a" => {
            let p2 = Ambient::base(BaseKind::P2);
            let tangent = [p2.divisor("3h")?, p2.parse("3*h^2")?];
            tower(Ambient::with_chern(BaseKind::P2, 2, &tangent)?, None, "z", None, Some(0))?
        }
        "thm2.1-6b" => tower(split_tower(BaseKind::P1xP1, "0", 2)?, None, "z + f1 + f2", None, Some(0))?,
        "thm2.1-7" => tower(split_tower(BaseKind::P2, "h", 2)?, None, "z + h", None, Some(0))?,
        // blow-up of a point in P3, then contract the exceptional divisor back
        "thm2.1-8" => tower(split_tower(BaseKind::P2, "h", 2)?, None, "2z", Some("2z - 2h"), Some(1))?,
        "thm3.1-2a" => Construction::P1BundleP2 { c2: 4 },
        "thm3.1-2b" => Construction::P1BundleP2 { c2: 1 },
        "thm3.1-2c" => Construction::P1BundleP2 { c2: -2 },
        "thm3.1-3a" => Construction::BlowupV2 { base_degree: 2 },
        "thm3.1-3b" => Construction::BlowupV2 { base_degree: 3 },
        "thm3.4-1" => quadric([0, 0, 0, 0], 2),
        "thm3.4-2" => quadric([0, 0, 0, 1], 1),
        "thm3.4-3" => quadric([0, 0, 1, 1], 0),
        "thm3.4-4" => quadric([0, 1, 1, 1], -1),
        "thm3.4-5" => quadric([-1, 0, 0, 1], 2),
        "thm3.4-6" => quadric([-1, 0, 0, 0], 3),
        "prop5.1-6a" => tower(split_tower(BaseKind::P2, "2h", 4)?, Some("z + h"), "z", None, None)?,
        "prop5.1-6b" => tower(
            split_tower(BaseKind::Hirzebruch(1), "C0 + 2f", 4)?,
            Some("z + C0 + f"),
            "z",
            None,
            None,
        )?,
        "prop5.1-6c" => {
            let mut t = quintic_quadric_bundle_tower(0)?;
            // the image is singular; its Picard number is not read off the model
            t.contracted_divisors = None;
            Construction::Tower(t)
        }
        "thm5.8-1" => Construction::QuadricBundleHighDim { n: 4, d: 5, cone_exception: true },
        "thm5.8-2" => Construction::QuadricBundleHighDim { n: 5, d: 5, cone_exception: false },
        "thm5.8-3" => Construction::QuadricBundleHighDim { n: 4, d: 5, cone_exception: false },
        _ => {
            if let Some(k) = id.strip_prefix("thm3.5-") {
                let k: i64 = match k.parse() {
                    Ok(k) => k,
                    Err(_) => return Ok(None),
                };
                Construction::P1BundleP2 { c2: k + 1 }
            } else if let Some(k) = id.strip_prefix("thm3.6-") {
                let k: i64 = match k.parse() {
                    Ok(k) => k,
                    Err(_) => return Ok(None),
                };
                Construction::BlowupV2 { base_degree: k + 1 }
            } else if let Some(rest) = id.strip_prefix("thm4.1-2-") {
                let Some((surface, c2)) = rest.split_once("-c") else {
                    return Ok(None);
                };
                let surface = match surface {
                    "p1p1" => BaseKind::P1xP1,
                    "f2" => BaseKind::Hirzebruch(2),
                    _ => return Ok(None),
                };
                let Ok(c2) = c2.parse::<i64>() else {
                    return Ok(None);
                };
                Construction::Rho3Bundle {
                    surface,
                    c2,
                    ruling_pair: c2 >= 2,
                }
            } else {
                return Ok(None);
            }
        }
    };
    Ok(Some(c))
}

/// The construction behind a catalog record, when there is one to compute
/// with. Families known only through their invariants have none.
pub fn model(id: &str) -> Option<Construction> {
    super::lookup(id)?;
    build(id).expect("built-in models are well formed")
}
