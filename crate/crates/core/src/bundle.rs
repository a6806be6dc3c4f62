//! Closed-form arithmetic for split bundles on `P1`, rank-2 bundles on
//! rational surfaces, and degree bookkeeping under point blow-ups.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chow::{Ambient, BaseKind, ChowElement, ChowError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("a split bundle needs at least one summand")]
    Empty,
    #[error("{0} is not a supported surface")]
    NotASurface(BaseKind),
    #[error("class lives on {found}, expected the plain {expected} base")]
    WrongSurface { expected: BaseKind, found: String },
    #[error("c1 must be a divisor class, got grade {0}")]
    NotADivisor(u32),
    #[error("Riemann-Roch numerator {0} is odd; c1 is not a valid class")]
    Parity(i64),
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("blow-up bookkeeping needs dimension at least 3, got {0}")]
    DimensionTooSmall(u32),
    #[error(transparent)]
    Chow(#[from] ChowError),
}

pub type Result<T, E = BundleError> = std::result::Result<T, E>;

/// `O(a_1) + ... + O(a_r)` on `P1`, stored with `a_1 <= ... <= a_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplitBundle(Vec<i64>);

impl SplitBundle {
    pub fn new(mut a: Vec<i64>) -> Result<SplitBundle> {
        if a.is_empty() {
            return Err(BundleError::Empty);
        }
        a.sort_unstable();
        Ok(SplitBundle(a))
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The projectivization as a chow-engine tower over `P1`.
    pub fn tower(&self) -> Result<Ambient> {
        let base = Ambient::base(BaseKind::P1);
        let fiber = base.generator("F")?;
        let twists = self
            .0
            .iter()
            .map(|&a| fiber.scaled(a))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ambient::tower(BaseKind::P1, &twists)?)
    }
}

impl TryFrom<Vec<i64>> for SplitBundle {
    type Error = BundleError;

    fn try_from(a: Vec<i64>) -> Result<Self> {
        SplitBundle::new(a)
    }
}

impl From<SplitBundle> for Vec<i64> {
    fn from(b: SplitBundle) -> Self {
        b.0
    }
}

impl fmt::Display for SplitBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn h0_split(e: &SplitBundle) -> i64 {
    e.0.iter().map(|&a| (a + 1).max(0)).sum()
}

pub fn h1_split(e: &SplitBundle) -> i64 {
    e.0.iter().map(|&a| (-a - 1).max(0)).sum()
}

/// Chern data `(c1, c2)` of a rank-2 bundle on a rational surface.
#[derive(Clone, PartialEq, Eq)]
pub struct Rank2Data {
    surface: BaseKind,
    c1: ChowElement,
    c2: i64,
}

impl Rank2Data {
    pub fn new(surface: BaseKind, c1: ChowElement, c2: i64) -> Result<Rank2Data> {
        if surface.dim() != 2 {
            return Err(BundleError::NotASurface(surface));
        }
        if c1.ambient() != &Ambient::base(surface) {
            return Err(BundleError::WrongSurface {
                expected: surface,
                found: c1.ambient().to_string(),
            });
        }
        if c1.grade() != 1 && !c1.is_zero() {
            return Err(BundleError::NotADivisor(c1.grade()));
        }
        let c1 = if c1.is_zero() {
            ChowElement::zero(c1.ambient(), 1)
        } else {
            c1
        };
        Ok(Rank2Data { surface, c1, c2 })
    }

    /// Convenience constructor from a printed `c1`, e.g. `"2*f1 + 2*f2"`.
    pub fn parse(surface: BaseKind, c1: &str, c2: i64) -> Result<Rank2Data> {
        let c1 = Ambient::base(surface).divisor(c1)?;
        Rank2Data::new(surface, c1, c2)
    }

    pub fn surface(&self) -> BaseKind {
        self.surface
    }

    pub fn c1(&self) -> &ChowElement {
        &self.c1
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    pub fn c1_squared(&self) -> Result<i64> {
        Ok(self.c1.pow(2)?.integrate()?)
    }

    /// `c1^2 - c2`, the top self-intersection of the tautological class on `P(F)`.
    pub fn degree(&self) -> Result<i64> {
        self.c1_squared()?
            .checked_sub(self.c2)
            .ok_or(BundleError::Chow(ChowError::Overflow))
    }

    /// `P(F)` as a chow-engine tower.
    pub fn tower(&self) -> Result<Ambient> {
        let base = Ambient::base(self.surface);
        let c2 = base.point().scaled(self.c2)?;
        Ok(Ambient::with_chern(self.surface, 2, &[self.c1.clone(), c2])?)
    }
}

impl fmt::Debug for Rank2Data {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rank2Data({self})")
    }
}

impl fmt::Display for Rank2Data {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: c1 = {}, c2 = {}", self.surface, self.c1, self.c2)
    }
}

fn surface_of(d: &Rank2Data) -> Ambient {
    Ambient::base(d.surface)
}

/// `chi(F) = 2 + (c1^2 - c1.K)/2 - c2` on a rational surface.
///
/// The parity check cannot fail for an honest class (`c1^2` and `c1.K` always
/// agree mod 2); it guards against a broken canonical table.
pub fn chi_rank2(d: &Rank2Data) -> Result<i64> {
    let k = surface_of(d).base_canonical();
    let c1k = d.c1.checked_mul(&k)?.integrate()?;
    let numerator = d.c1_squared()? - c1k;
    if numerator % 2 != 0 {
        return Err(BundleError::Parity(numerator));
    }
    Ok(2 + numerator / 2 - d.c2)
}

/// `F(M)`: `c1' = c1 + 2M`, `c2' = c2 + c1.M + M^2`.
pub fn twist_rank2(d: &Rank2Data, m: &ChowElement) -> Result<Rank2Data> {
    let surface = surface_of(d);
    if m.ambient() != &surface {
        return Err(BundleError::WrongSurface {
            expected: d.surface,
            found: m.ambient().to_string(),
        });
    }
    if m.is_zero() {
        return Ok(d.clone());
    }
    if m.grade() != 1 {
        return Err(BundleError::NotADivisor(m.grade()));
    }
    let c1 = d.c1.checked_add(&m.scaled(2)?)?;
    let c1m = d.c1.checked_mul(m)?.integrate()?;
    let mm = m.pow(2)?.integrate()?;
    let c2 = d
        .c2
        .checked_add(c1m)
        .and_then(|x| x.checked_add(mm))
        .ok_or(BundleError::Chow(ChowError::Overflow))?;
    Rank2Data::new(d.surface, c1, c2)
}

/// A value of `h^0` obtained from an Euler characteristic. The flag records
/// that higher cohomology was assumed to vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionCount {
    pub value: i64,
    pub assumes_vanishing: bool,
}

impl SectionCount {
    pub fn exact(value: i64) -> SectionCount {
        SectionCount {
            value,
            assumes_vanishing: false,
        }
    }
}

/// `h^0(F) = chi(F)` under the assumption `H^q(F) = 0` for `q >= 1`.
pub fn h0_from_chi(d: &Rank2Data) -> Result<SectionCount> {
    Ok(SectionCount {
        value: chi_rank2(d)?,
        assumes_vanishing: true,
    })
}

/// One step of blowing up a general point: `d -> d - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    pub dim: u32,
    pub from: i64,
    pub degree: i64,
    /// The new polarization is still big: `d - 1 > 0`.
    pub valid: bool,
    /// In dimension 3 a general point may be blown up only when `d >= 2`.
    pub general_point_admissible: Option<bool>,
}

pub fn blowup_degree(n: u32, d: i64) -> Result<BlowupStep> {
    if n < 3 {
        return Err(BundleError::DimensionTooSmall(n));
    }
    if d <= 0 {
        return Err(BundleError::NonPositiveDegree(d));
    }
    Ok(BlowupStep {
        dim: n,
        from: d,
        degree: d - 1,
        valid: d - 1 > 0,
        general_point_admissible: (n == 3).then_some(d >= 2),
    })
}

/// Blow up points one at a time while the result stays big.
pub fn blowup_chain(n: u32, d: i64) -> Result<Vec<BlowupStep>> {
    let mut steps = Vec::new();
    let mut current = d;
    loop {
        let step = blowup_degree(n, current)?;
        if !step.valid {
            break;
        }
        steps.push(step);
        current = step.degree;
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(a: &[i64]) -> SplitBundle {
        SplitBundle::new(a.to_vec()).unwrap()
    }

    #[test]
    fn sorted_at_construction() {
        assert_eq!(split(&[1, 0, -1, 0]).degrees(), &[-1, 0, 0, 1]);
        assert_eq!(SplitBundle::new(vec![]), Err(BundleError::Empty));
    }

    #[test]
    fn sections_of_split_bundles() {
        assert_eq!((h0_split(&split(&[0, 0, 0, 0])), h1_split(&split(&[0, 0, 0, 0]))), (4, 0));
        assert_eq!(h0_split(&split(&[0, 1, 1, 1])), 7);
        assert_eq!(h1_split(&split(&[-2, 0, 0, 0])), 1);
    }

    #[test]
    fn riemann_roch_on_p2() {
        for k in 0..8 {
            let d = Rank2Data::parse(BaseKind::P2, "3h", k + 2).unwrap();
            assert_eq!(chi_rank2(&d).unwrap(), 9 - k);
        }
        let trivial = Rank2Data::parse(BaseKind::P2, "0", 0).unwrap();
        assert_eq!(chi_rank2(&trivial).unwrap(), 2);
    }

    #[test]
    fn twist_excludes_c2_one() {
        let d = Rank2Data::parse(BaseKind::P1xP1, "2f1 + 2f2", 1).unwrap();
        let m = Ambient::base(BaseKind::P1xP1).divisor("-f1 - 2f2").unwrap();
        assert_eq!(twist_rank2(&d, &m).unwrap().c2(), -1);
    }

    #[test]
    fn twist_on_wrong_surface() {
        let d = Rank2Data::parse(BaseKind::P2, "-h", 3).unwrap();
        let m = Ambient::base(BaseKind::P1xP1).divisor("f1").unwrap();
        assert!(matches!(
            twist_rank2(&d, &m),
            Err(BundleError::WrongSurface { .. })
        ));
    }

    #[test]
    fn blowups() {
        assert_eq!(blowup_degree(3, 8).unwrap().degree, 7);
        let last = blowup_degree(5, 1).unwrap();
        assert_eq!((last.degree, last.valid), (0, false));
        assert_eq!(blowup_degree(4, 5).unwrap().degree, 4);
        assert_eq!(blowup_degree(3, 0), Err(BundleError::NonPositiveDegree(0)));
        assert_eq!(blowup_degree(2, 4), Err(BundleError::DimensionTooSmall(2)));
        assert_eq!(blowup_chain(3, 6).unwrap().len(), 5);
    }

    #[test]
    fn degree_of_projective_bundle() {
        let d = Rank2Data::parse(BaseKind::Hirzebruch(2), "2C0 + 4f", 3).unwrap();
        assert_eq!(d.degree().unwrap(), 5);
        let t = d.tower().unwrap();
        assert_eq!(t.zeta().unwrap().pow(3).unwrap().integrate().unwrap(), 5);
    }
}
