use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Exponent vector over the (at most two) generators of a base ring.
pub type BaseExponents = [u32; 2];

/// The closed set of base varieties the tower engine supports.
///
/// | kind          | generators | relations                 | point     |
/// |---------------|------------|---------------------------|-----------|
/// | `P1`          | `F`        | `F^2 = 0`                 | `F`       |
/// | `P2`          | `h`        | `h^3 = 0`                 | `h^2`     |
/// | `P1xP1`       | `f1, f2`   | `f1^2 = f2^2 = 0`         | `f1*f2`   |
/// | `Hirzebruch(e)` | `C0, f`  | `f^2 = 0, C0^2 = -e*C0*f` | `C0*f`    |
/// | `P1xP2`       | `p, h`     | `p^2 = 0, h^3 = 0`        | `p*h^2`   |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    P1,
    P2,
    P1xP1,
    Hirzebruch(u32),
    P1xP2,
}

impl BaseKind {
    pub fn dim(self) -> u32 {
        match self {
            BaseKind::P1 => 1,
            BaseKind::P2 | BaseKind::P1xP1 | BaseKind::Hirzebruch(_) => 2,
            BaseKind::P1xP2 => 3,
        }
    }

    pub fn generators(self) -> &'static [&'static str] {
        match self {
            BaseKind::P1 => &["F"],
            BaseKind::P2 => &["h"],
            BaseKind::P1xP1 => &["f1", "f2"],
            BaseKind::Hirzebruch(_) => &["C0", "f"],
            BaseKind::P1xP2 => &["p", "h"],
        }
    }

    /// Rank of the Picard group, i.e. the number of degree-1 generators.
    pub fn picard_rank(self) -> u32 {
        self.generators().len() as u32
    }

    /// Exponents of the monomial representing the class of a point.
    pub fn point(self) -> BaseExponents {
        match self {
            BaseKind::P1 => [1, 0],
            BaseKind::P2 => [2, 0],
            BaseKind::P1xP1 | BaseKind::Hirzebruch(_) => [1, 1],
            BaseKind::P1xP2 => [1, 2],
        }
    }

    /// Coefficients of the canonical class on the generators.
    pub fn canonical_coefficients(self) -> [i64; 2] {
        match self {
            BaseKind::P1 => [-2, 0],
            BaseKind::P2 => [-3, 0],
            BaseKind::P1xP1 => [-2, -2],
            BaseKind::Hirzebruch(e) => [-2, -(i64::from(e) + 2)],
            BaseKind::P1xP2 => [-2, -3],
        }
    }

    /// Reduce one base monomial to normal form: either zero or a single
    /// normal monomial with an integer coefficient.
    pub(crate) fn reduce(self, exps: BaseExponents) -> Option<(BaseExponents, i64)> {
        let [a, b] = exps;
        if a + b > self.dim() {
            return None;
        }
        match self {
            BaseKind::P1 => (a <= 1).then_some((exps, 1)),
            BaseKind::P2 => (a <= 2).then_some((exps, 1)),
            BaseKind::P1xP1 => (a <= 1 && b <= 1).then_some((exps, 1)),
            BaseKind::Hirzebruch(e) => match (a, b) {
                (_, b) if b >= 2 => None,
                // C0^2 = -e * C0*f
                (2, 0) => (e != 0).then(|| ([1, 1], -i64::from(e))),
                _ => Some((exps, 1)),
            },
            BaseKind::P1xP2 => (a <= 1 && b <= 2).then_some((exps, 1)),
        }
    }

    pub(crate) fn generator_index(self, name: &str) -> Option<usize> {
        self.generators().iter().position(|g| *g == name)
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::P1 => f.write_str("P1"),
            BaseKind::P2 => f.write_str("P2"),
            BaseKind::P1xP1 => f.write_str("P1xP1"),
            BaseKind::Hirzebruch(e) => write!(f, "F{e}"),
            BaseKind::P1xP2 => f.write_str("P1xP2"),
        }
    }
}

impl FromStr for BaseKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "p1" => Ok(BaseKind::P1),
            "p2" => Ok(BaseKind::P2),
            "p1xp1" => Ok(BaseKind::P1xP1),
            "p1xp2" => Ok(BaseKind::P1xP2),
            _ => lower
                .strip_prefix('f')
                .and_then(|e| e.parse::<u32>().ok())
                .map(BaseKind::Hirzebruch)
                .ok_or_else(|| format!("unknown base {s:?}")),
        }
    }
}
