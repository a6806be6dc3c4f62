//! Quadric fibrations `X in |2z + alpha F|` on `P(O(a1) + ... + O(a4))` over `P1`.

use serde::Serialize;

use super::{split, EnumerateError, Result};
use crate::bundle::SplitBundle;
use crate::construction::Construction;

/// Largest `a4` reachable with `a1 >= -1` and `sum <= 3`: `3 + 3 = 6`.
const A_MAX: i64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Small {
        case: u8,
        family: String,
        partner: String,
    },
    Divisorial {
        reason: String,
        /// Not named in the source argument; follows its exclusion pattern.
        inferred: bool,
    },
    RejectedRange {
        reason: String,
    },
    RejectedGeometric {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleVerdict {
    pub bundle: SplitBundle,
    pub alpha: i64,
    pub degree: i64,
    pub verdict: Verdict,
}

impl TupleVerdict {
    pub fn is_small(&self) -> bool {
        matches!(self.verdict, Verdict::Small { .. })
    }

    pub fn construction(&self) -> Construction {
        Construction::QuadricFibration {
            bundle: self.bundle.clone(),
            alpha: self.alpha,
        }
    }

    /// `(a1,a2,a3,a4)_alpha`
    pub fn label(&self) -> String {
        format!("{}_{}", self.bundle, self.alpha)
    }
}

fn small(case: u8, partner: &str) -> Verdict {
    let family = format!("thm3.4-{case}");
    let partner = if partner == "self" { family.clone() } else { partner.to_string() };
    Verdict::Small {
        case,
        family,
        partner,
    }
}

/// `alpha = 2 - sum(a)` comes from `K_X = -2H`; it is never a free parameter.
pub fn classify_tuple(e: &SplitBundle) -> Result<TupleVerdict> {
    if e.rank() != 4 {
        return Err(EnumerateError::WrongRank(e.rank()));
    }
    let a = e.degrees();
    let sum = e.degree();
    let alpha = 2 - sum;
    let verdict = classify(a, sum, alpha);
    Ok(TupleVerdict {
        bundle: e.clone(),
        alpha,
        degree: sum + 2,
        verdict,
    })
}

fn classify(a: &[i64], sum: i64, alpha: i64) -> Verdict {
    let range = |reason: &str| Verdict::RejectedRange {
        reason: reason.into(),
    };
    if a[0] < -1 {
        return range("a1 >= -1 by h^1 vanishing");
    }
    if !(-1..=3).contains(&sum) {
        return range("-1 <= a1 + a2 + a3 + a4 <= 3");
    }
    if a[0] == 0 {
        return match (a[1], a[2], a[3]) {
            (0, 0, 0) => small(1, "self"),
            (0, 0, 1) => small(2, "thm3.6-3"),
            (0, 0, a4) => Verdict::Divisorial {
                reason: format!("O_F(1)^2.D.X = 2 - a4 = {} <= 0", 2 - a4),
                inferred: true,
            },
            (0, 1, 1) => small(3, "self"),
            (0, 1, 2) => Verdict::Divisorial {
                reason: "psi is divisorial since X in |O_F(2) - F|".into(),
                inferred: false,
            },
            (1, 1, 1) => small(4, "thm3.5-1"),
            // unreachable under sum <= 3
            _ => Verdict::Divisorial {
                reason: "a4 >= 2".into(),
                inferred: true,
            },
        };
    }
    // a1 = -1 (a1 >= 1 would give sum >= 4)
    if a[1] < 0 {
        return Verdict::RejectedGeometric {
            reason: "a1 = -1 forces a2 >= 0".into(),
        };
    }
    if !(0..=1).contains(&(alpha - 2)) {
        return Verdict::RejectedGeometric {
            reason: format!("0 <= -2 + alpha <= 1 fails: -2 + alpha = {}", alpha - 2),
        };
    }
    match (a[1], a[2], a[3]) {
        (0, 0, 1) => small(5, "self"),
        (0, 0, 0) => small(6, "self"),
        _ => Verdict::RejectedGeometric {
            reason: "no quadric fibration with this splitting type".into(),
        },
    }
}

/// Every non-decreasing 4-tuple with `a1 >= -1` and `sum <= 3`, in
/// lexicographic order.
pub fn enumerate_quadric_fibrations() -> Vec<TupleVerdict> {
    let mut out = Vec::new();
    for a1 in -1..=A_MAX {
        for a2 in a1..=A_MAX {
            for a3 in a2..=A_MAX {
                for a4 in a3..=A_MAX {
                    if a1 + a2 + a3 + a4 > 3 {
                        continue;
                    }
                    let v = classify_tuple(&split(&[a1, a2, a3, a4])).expect("rank 4");
                    out.push(v);
                }
            }
        }
    }
    out
}

pub fn small_verdicts() -> Vec<TupleVerdict> {
    enumerate_quadric_fibrations()
        .into_iter()
        .filter(TupleVerdict::is_small)
        .collect()
}

/// The small verdicts whose degree lies in `lo..=hi`.
pub fn quadric_fibrations_in_window(lo: i64, hi: i64) -> Vec<TupleVerdict> {
    small_verdicts()
        .into_iter()
        .filter(|v| (lo..=hi).contains(&v.degree))
        .collect()
}
