//! Concrete models of families: enough data to recompute dimension, degree,
//! Picard number, the index condition and `h^0(H)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bundle::{
    blowup_degree, chi_rank2, h0_split, twist_rank2, BundleError, Rank2Data, SectionCount,
    SplitBundle,
};
use crate::chow::{Ambient, BaseKind, ChowElement, ChowError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error(transparent)]
    Bundle(#[from] BundleError),
    #[error("invalid model: {0}")]
    Invalid(String),
}

pub type Result<T, E = ModelError> = std::result::Result<T, E>;

/// A hypersurface (or the whole ambient) in a bundle tower, cut down by
/// `cuts` further members of `|H|`, possibly followed by a contraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerModel {
    pub ambient: Ambient,
    pub divisor: Option<ChowElement>,
    pub polarization: ChowElement,
    /// `D` in `K_model = pullback(K_X) + D`; zero when the model is crepant.
    pub discrepancy: Option<ChowElement>,
    pub cuts: u32,
    /// Number of divisors contracted on the way to the family; `None` when
    /// the Picard number of the target cannot be read off the model.
    pub contracted_divisors: Option<u32>,
}

impl TowerModel {
    pub fn dim(&self) -> u32 {
        self.ambient.dim() - u32::from(self.divisor.is_some()) - self.cuts
    }

    /// `K` of the model, as an ambient class restricting to it.
    pub fn canonical(&self) -> Result<ChowElement> {
        let mut k = self.ambient.canonical_class()?;
        if let Some(x) = &self.divisor {
            k = k.checked_add(x)?;
        }
        k.checked_add(&self.polarization.scaled(i64::from(self.cuts))?)
            .map_err(Into::into)
    }

    pub fn degree(&self) -> Result<i64> {
        let h = &self.polarization;
        let mut top = h.pow(self.dim() + self.cuts)?;
        if let Some(x) = &self.divisor {
            top = top.checked_mul(x)?;
        }
        Ok(top.integrate()?)
    }
}

/// How a family (or candidate) is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `X` in `|2z + alpha F|` on `P(E)` over `P1`, `H = z`.
    QuadricFibration { bundle: SplitBundle, alpha: i64 },
    /// `P(F)` over `P2` with `c1(F) = -1`, `H = z + 2h`.
    P1BundleP2 { c2: i64 },
    /// Blow-up of a general point on the Picard-rank-one del Pezzo threefold
    /// of the given degree.
    BlowupV2 { base_degree: i64 },
    /// `P(F)` over `P1xP1` or `F2` with `c1(F) = -K_S`, `H = z`.
    Rho3Bundle { surface: BaseKind, c2: i64, ruling_pair: bool },
    /// `P(F' + O^(n-3))` over a surface, `H = z`.
    PnBundle { n: u32, bundle: Rank2Data },
    /// Quadric bundle over `P1` in dimension `n >= 4`.
    QuadricBundleHighDim { n: u32, d: i64, cone_exception: bool },
    /// A smooth del Pezzo manifold known only by its invariants.
    DelPezzo { n: u32, d: i64, picard: u32 },
    /// Blow-up of `points` general points, one at a time.
    PointBlowupChain { base: Box<Construction>, points: u32 },
    Tower(TowerModel),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalCheck {
    /// `K - D` on the model.
    pub computed: String,
    /// `-(n-1) H`.
    pub expected: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub dim: u32,
    pub degree: i64,
    pub picard: Option<u32>,
    pub canonical: Option<CanonicalCheck>,
    pub h0: Option<SectionCount>,
}

fn invalid(msg: impl Into<String>) -> ModelError {
    ModelError::Invalid(msg.into())
}

/// The model for the hypersurface in the degree-5 fivefold construction:
/// `X~ = z + h` in `P(O(h + p) + O^3)` over `P1xP2`, contracting
/// `D = z - h - p`. With `cuts = 1` this is its hyperplane section.
pub fn quintic_quadric_bundle_tower(cuts: u32) -> Result<TowerModel> {
    let base = Ambient::base(BaseKind::P1xP2);
    let zero = ChowElement::zero(&base, 1);
    let ambient = Ambient::tower(
        BaseKind::P1xP2,
        &[base.divisor("h + p")?, zero.clone(), zero.clone(), zero],
    )?;
    Ok(TowerModel {
        divisor: Some(ambient.divisor("z + h")?),
        polarization: ambient.zeta()?,
        discrepancy: Some(ambient.divisor("z - h - p")?),
        cuts,
        contracted_divisors: Some(1),
        ambient,
    })
}

fn p2_bundle(c2: i64) -> Result<Rank2Data> {
    Ok(Rank2Data::parse(BaseKind::P2, "-h", c2)?)
}

/// `-K_S` for the supported surfaces.
pub fn anticanonical(surface: BaseKind) -> Result<ChowElement> {
    let k = Ambient::base(surface).base_canonical();
    Ok(k.scaled(-1)?)
}

fn h0_rank2_twist(bundle: &Rank2Data, twist: &ChowElement) -> Result<SectionCount> {
    let twisted = twist_rank2(bundle, twist)?;
    Ok(SectionCount {
        value: chi_rank2(&twisted)?,
        assumes_vanishing: true,
    })
}

fn canonical_check(
    k: ChowElement,
    discrepancy: Option<&ChowElement>,
    h: &ChowElement,
    dim: u32,
) -> Result<CanonicalCheck> {
    let k = match discrepancy {
        Some(d) => k.checked_sub(d)?,
        None => k,
    };
    let expected = h.scaled(-(i64::from(dim) - 1))?;
    Ok(CanonicalCheck {
        computed: k.to_string(),
        expected: expected.to_string(),
        holds: k == expected,
    })
}

impl Construction {
    /// Key used to match enumeration output against catalog models.
    pub fn key(&self) -> String {
        match self {
            Construction::QuadricFibration { bundle, alpha } => {
                format!("quadric-fibration {bundle}_{alpha}")
            }
            Construction::P1BundleP2 { c2 } => format!("p1-bundle/P2 c2={c2}"),
            Construction::BlowupV2 { base_degree } => format!("blowup V2,{base_degree}"),
            Construction::Rho3Bundle { surface, c2, .. } => format!("p1-bundle/{surface} c2={c2}"),
            Construction::PnBundle { n, bundle } => format!(
                "p{}-bundle/{} c1={} c2={}",
                n - 2,
                bundle.surface(),
                bundle.c1(),
                bundle.c2()
            ),
            Construction::QuadricBundleHighDim {
                n,
                d,
                cone_exception,
            } => {
                if *cone_exception {
                    format!("quadric-bundle n={n} cone")
                } else {
                    format!("quadric-bundle n={n} d={d}")
                }
            }
            Construction::DelPezzo { n, d, picard } => format!("del-pezzo n={n} d={d} rho={picard}"),
            Construction::PointBlowupChain { base, points } => {
                format!("blowup {points} points of [{}]", base.key())
            }
            Construction::Tower(t) => format!(
                "tower {} | X={} | H={}",
                t.ambient,
                t.divisor
                    .as_ref()
                    .map_or_else(|| "-".to_string(), ToString::to_string),
                t.polarization
            ),
        }
    }

    pub fn evaluate(&self) -> Result<Evaluation> {
        match self {
            Construction::QuadricFibration { bundle, alpha } => {
                if bundle.rank() != 4 {
                    return Err(invalid("a quadric fibration needs a rank-4 bundle"));
                }
                let ambient = bundle.tower()?;
                let z = ambient.zeta()?;
                let x = z
                    .scaled(2)?
                    .checked_add(&ambient.generator("F")?.scaled(*alpha)?)?;
                let k = ambient.adjunction(&x)?;
                Ok(Evaluation {
                    dim: 3,
                    degree: ambient.polarized_degree(&x, &z)?,
                    picard: Some(2),
                    canonical: Some(canonical_check(k, None, &z, 3)?),
                    h0: Some(SectionCount::exact(h0_split(bundle))),
                })
            }
            Construction::P1BundleP2 { c2 } => {
                let f = p2_bundle(*c2)?;
                let ambient = f.tower()?;
                let h = ambient.divisor("z + 2h")?;
                let k = ambient.canonical_class()?;
                let twist = Ambient::base(BaseKind::P2).divisor("2h")?;
                Ok(Evaluation {
                    dim: 3,
                    degree: h.pow(3)?.integrate()?,
                    picard: Some(2),
                    canonical: Some(canonical_check(k, None, &h, 3)?),
                    h0: Some(h0_rank2_twist(&f, &twist)?),
                })
            }
            Construction::BlowupV2 { base_degree } => Construction::PointBlowupChain {
                base: Box::new(Construction::DelPezzo {
                    n: 3,
                    d: *base_degree,
                    picard: 1,
                }),
                points: 1,
            }
            .evaluate(),
            Construction::Rho3Bundle { surface, c2, .. } => {
                if !matches!(surface, BaseKind::P1xP1 | BaseKind::Hirzebruch(2)) {
                    return Err(invalid(format!("{surface} is not P1xP1 or F2")));
                }
                let f = Rank2Data::new(*surface, anticanonical(*surface)?, *c2)?;
                rank2_bundle_evaluation(&f, 3)
            }
            Construction::PnBundle { n, bundle } => rank2_bundle_evaluation(bundle, *n),
            Construction::QuadricBundleHighDim {
                n,
                d,
                cone_exception,
            } => {
                let eval = if *cone_exception {
                    // evaluated on the small resolution P(F'(2) + O^(n-3)) over P2
                    let f = twist_rank2(&p2_bundle(2)?, &Ambient::base(BaseKind::P2).divisor("2h")?)?;
                    rank2_bundle_evaluation(&f, *n)?
                } else {
                    match n {
                        5 => Construction::Tower(quintic_quadric_bundle_tower(0)?).evaluate()?,
                        4 => Construction::Tower(quintic_quadric_bundle_tower(1)?).evaluate()?,
                        _ => return Err(invalid(format!("no quadric bundle model in dimension {n}"))),
                    }
                };
                if eval.degree != *d {
                    return Err(invalid(format!(
                        "quadric bundle model has degree {}, not {d}",
                        eval.degree
                    )));
                }
                Ok(eval)
            }
            Construction::DelPezzo { n, d, picard } => {
                if *n < 3 || *d < 1 {
                    return Err(invalid("del Pezzo data out of range"));
                }
                Ok(Evaluation {
                    dim: *n,
                    degree: *d,
                    picard: Some(*picard),
                    canonical: None,
                    h0: None,
                })
            }
            Construction::PointBlowupChain { base, points } => {
                let mut eval = base.evaluate()?;
                let base_h0 = eval.h0;
                for _ in 0..*points {
                    let step = blowup_degree(eval.dim, eval.degree)?;
                    if !step.valid || step.general_point_admissible == Some(false) {
                        return Err(invalid(format!(
                            "cannot blow up a general point at degree {}",
                            eval.degree
                        )));
                    }
                    eval.degree = step.degree;
                }
                eval.picard = eval.picard.map(|p| p + points);
                eval.canonical = None;
                // a general point imposes one condition on |H| at each step
                eval.h0 = base_h0.map(|s| SectionCount {
                    value: s.value - i64::from(*points),
                    assumes_vanishing: true,
                });
                Ok(eval)
            }
            Construction::Tower(t) => {
                let dim = t.dim();
                let k = t.canonical()?;
                Ok(Evaluation {
                    dim,
                    degree: t.degree()?,
                    picard: t
                        .contracted_divisors
                        .map(|c| t.ambient.picard_rank().saturating_sub(c)),
                    canonical: Some(canonical_check(
                        k,
                        t.discrepancy.as_ref(),
                        &t.polarization,
                        dim,
                    )?),
                    h0: None,
                })
            }
        }
    }
}

/// `P(F' + O^(n-3))` with `H = z`; requires `c1(F') = -K_S`.
fn rank2_bundle_evaluation(f: &Rank2Data, n: u32) -> Result<Evaluation> {
    if n < 3 {
        return Err(invalid("dimension must be at least 3"));
    }
    let surface = f.surface();
    let base = Ambient::base(surface);
    let c2 = base.point().scaled(f.c2())?;
    let ambient = Ambient::with_chern(surface, n - 1, &[f.c1().clone(), c2])?;
    let z = ambient.zeta()?;
    let k = ambient.canonical_class()?;
    let zero = ChowElement::zero(&base, 1);
    let h0 = h0_rank2_twist(f, &zero)?;
    Ok(Evaluation {
        dim: n,
        degree: z.pow(n)?.integrate()?,
        picard: Some(ambient.picard_rank()),
        canonical: Some(canonical_check(k, None, &z, n)?),
        h0: Some(SectionCount {
            value: h0.value + i64::from(n) - 3,
            assumes_vanishing: true,
        }),
    })
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::QuadricFibration { bundle, alpha } => {
                write!(f, "X in |2z + {alpha}F| on P(O{bundle}) over P1")
            }
            Construction::P1BundleP2 { c2 } => write!(f, "P(F) over P2, c1(F) = -1, c2(F) = {c2}"),
            Construction::BlowupV2 { base_degree } => {
                write!(f, "blow-up of a general point on V_{{2,{base_degree}}}")
            }
            Construction::Rho3Bundle {
                surface,
                c2,
                ruling_pair,
            } => {
                write!(f, "P(F) over {surface}, c1(F) = -K, c2(F) = {c2}")?;
                if *ruling_pair {
                    write!(f, ", two points of Z on a ruling line")?;
                }
                Ok(())
            }
            Construction::PnBundle { n, bundle } => write!(
                f,
                "P(F' + O^{}) over {}, F': c1 = {}, c2 = {}",
                n - 3,
                bundle.surface(),
                bundle.c1(),
                bundle.c2()
            ),
            Construction::QuadricBundleHighDim {
                n,
                d,
                cone_exception,
            } => {
                if *cone_exception {
                    write!(f, "quadric bundle over P1, n = {n}, cone with small resolution over P2")
                } else {
                    write!(f, "quadric bundle over P1, n = {n}, d = {d}")
                }
            }
            Construction::DelPezzo { n, d, picard } => {
                write!(f, "smooth del Pezzo {n}-fold, d = {d}, rho = {picard}")
            }
            Construction::PointBlowupChain { base, points } => {
                write!(f, "blow-up of {points} general point(s) on [{base}]")
            }
            Construction::Tower(t) => {
                match &t.divisor {
                    Some(x) => write!(f, "X in |{x}| on {}", t.ambient)?,
                    None => write!(f, "{}", t.ambient)?,
                }
                write!(f, ", H = {}", t.polarization)?;
                if t.cuts > 0 {
                    write!(f, ", cut by {} member(s) of |H|", t.cuts)?;
                }
                if let Some(d) = &t.discrepancy {
                    write!(f, ", contracting {d}")?;
                }
                Ok(())
            }
        }
    }
}
