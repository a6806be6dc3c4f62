use std::collections::BTreeMap;
use std::fmt;

use super::ambient::Ambient;
use super::base::{BaseExponents, BaseKind};
use super::{add, mul, ChowError, Result};

/// A monomial `base * z^zeta`. The derived order (base exponents first,
/// `z` last, lexicographic) is the printing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub base: BaseExponents,
    pub zeta: u32,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.base[0] + self.base[1] + self.zeta
    }
}

/// A homogeneous class in the Chow ring of an [`Ambient`], always in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowElement {
    ambient: Ambient,
    grade: u32,
    terms: BTreeMap<Monomial, i64>,
}

impl ChowElement {
    pub fn zero(ambient: &Ambient, grade: u32) -> ChowElement {
        ChowElement {
            ambient: ambient.clone(),
            grade,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: &Ambient) -> ChowElement {
        let mut terms = BTreeMap::new();
        terms.insert(
            Monomial {
                base: [0, 0],
                zeta: 0,
            },
            1,
        );
        ChowElement {
            ambient: ambient.clone(),
            grade: 0,
            terms,
        }
    }

    /// Build a class from arbitrary (not necessarily reduced) monomials of
    /// the given grade.
    pub fn from_terms<I>(ambient: &Ambient, grade: u32, terms: I) -> Result<ChowElement>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let kind = ambient.base_kind();
        let mut acc = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != grade {
                return Err(ChowError::MixedGrade(grade, m.degree()));
            }
            if m.zeta > 0 && !ambient.is_tower() {
                return Err(ChowError::UnknownGenerator {
                    name: "z".into(),
                    ambient: ambient.to_string(),
                });
            }
            if kind.generators().len() < 2 && m.base[1] > 0 {
                return Err(ChowError::UnknownGenerator {
                    name: format!("generator #2 of {kind}"),
                    ambient: ambient.to_string(),
                });
            }
            if c != 0 {
                ambient.reduce_into(&mut acc, m.base, m.zeta, c)?;
            }
        }
        Ok(ChowElement {
            ambient: ambient.clone(),
            grade,
            terms: acc,
        })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Re-reduce the stored terms. Stored elements are already normal, so
    /// this is the identity; it exists to make the idempotence checkable.
    pub fn normal_form(&self) -> Result<ChowElement> {
        ChowElement::from_terms(&self.ambient, self.grade, self.terms())
    }

    fn same_ambient(&self, other: &ChowElement) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(ChowError::AmbientMismatch {
                left: self.ambient.to_string(),
                right: other.ambient.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &ChowElement) -> Result<ChowElement> {
        self.same_ambient(other)?;
        if self.is_zero() && other.is_zero() {
            // zero of any grade adds to zero of any grade
            return Ok(ChowElement::zero(&self.ambient, self.grade.max(other.grade)));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.grade != other.grade {
            return Err(ChowError::MixedGrade(self.grade, other.grade));
        }
        let mut terms = self.terms.clone();
        for (&m, &c) in &other.terms {
            let slot = terms.entry(m).or_insert(0);
            *slot = add(*slot, c)?;
            if *slot == 0 {
                terms.remove(&m);
            }
        }
        Ok(ChowElement {
            ambient: self.ambient.clone(),
            grade: self.grade,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &ChowElement) -> Result<ChowElement> {
        self.checked_add(&other.scaled(-1)?)
    }

    pub fn scaled(&self, k: i64) -> Result<ChowElement> {
        let mut terms = BTreeMap::new();
        if k != 0 {
            for (&m, &c) in &self.terms {
                terms.insert(m, mul(c, k)?);
            }
        }
        Ok(ChowElement {
            ambient: self.ambient.clone(),
            grade: self.grade,
            terms,
        })
    }

    pub fn checked_mul(&self, other: &ChowElement) -> Result<ChowElement> {
        self.same_ambient(other)?;
        let grade = self.grade + other.grade;
        let mut acc = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let base = [a.base[0] + b.base[0], a.base[1] + b.base[1]];
                self.ambient
                    .reduce_into(&mut acc, base, a.zeta + b.zeta, mul(ca, cb)?)?;
            }
        }
        Ok(ChowElement {
            ambient: self.ambient.clone(),
            grade,
            terms: acc,
        })
    }

    pub fn pow(&self, k: u32) -> Result<ChowElement> {
        let mut out = ChowElement::one(&self.ambient);
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Divide every coefficient by `k`, if all are divisible.
    pub fn div_exact(&self, k: i64) -> Option<ChowElement> {
        if k == 0 {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (&m, &c) in &self.terms {
            if c % k != 0 {
                return None;
            }
            terms.insert(m, c / k);
        }
        Some(ChowElement {
            ambient: self.ambient.clone(),
            grade: self.grade,
            terms,
        })
    }

    /// Degree of a top-grade class.
    pub fn integrate(&self) -> Result<i64> {
        let top = self.ambient.dim();
        if self.grade != top {
            return Err(ChowError::NotTopDegree {
                grade: self.grade,
                top,
            });
        }
        let m = Monomial {
            base: self.ambient.base_kind().point(),
            zeta: self.ambient.rank() - 1,
        };
        Ok(self.coefficient(&m))
    }
}

/// Render terms in canonical order, e.g. `-3*z - h - p` or `C0*f*z^2`.
pub(crate) fn fmt_terms<I>(kind: BaseKind, terms: I) -> String
where
    I: IntoIterator<Item = (Monomial, i64)>,
{
    let names = kind.generators();
    let mut out = String::new();
    for (m, c) in terms {
        let mut factors = Vec::new();
        for (i, &e) in m.base.iter().enumerate() {
            if e > 0 {
                factors.push(power(names[i], e));
            }
        }
        if m.zeta > 0 {
            factors.push(power("z", m.zeta));
        }
        let magnitude = c.unsigned_abs();
        let body = if factors.is_empty() {
            magnitude.to_string()
        } else if magnitude == 1 {
            factors.join("*")
        } else {
            format!("{magnitude}*{}", factors.join("*"))
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_terms(self.ambient.base_kind(), self.terms()))
    }
}

impl fmt::Debug for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} on {}", self.grade, self, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scroll(twists: &[i64]) -> Ambient {
        let base = Ambient::base(BaseKind::P1);
        let f = base.generator("F").unwrap();
        let ts: Vec<_> = twists.iter().map(|&a| f.scaled(a).unwrap()).collect();
        Ambient::tower(BaseKind::P1, &ts).unwrap()
    }

    #[test]
    fn fiber_squares_to_zero() {
        let a = scroll(&[0, 0, 0, 1]);
        let f = a.generator("F").unwrap();
        assert!(f.checked_mul(&f).unwrap().is_zero());
    }

    #[test]
    fn zeta_fourth_power_on_scroll() {
        let a = scroll(&[0, 0, 0, 1]);
        let z = a.zeta().unwrap();
        assert_eq!(z.pow(4).unwrap().to_string(), "F*z^3");
    }

    #[test]
    fn quadric_fibration_degree() {
        let a = scroll(&[0, 1, 1, 1]);
        let z = a.zeta().unwrap();
        let f = a.generator("F").unwrap();
        let x = z.scaled(2).unwrap().checked_sub(&f).unwrap();
        assert_eq!(a.polarized_degree(&x, &z).unwrap(), 5);
    }

    #[test]
    fn integrate_rejects_wrong_grade() {
        let a = scroll(&[0, 0, 0, 0]);
        let z = a.zeta().unwrap();
        assert_eq!(
            z.integrate(),
            Err(ChowError::NotTopDegree { grade: 1, top: 4 })
        );
    }

    #[test]
    fn mixed_grades_are_rejected() {
        let a = scroll(&[0, 1]);
        let z = a.zeta().unwrap();
        let z2 = z.pow(2).unwrap();
        assert_eq!(z.checked_add(&z2), Err(ChowError::MixedGrade(1, 2)));
    }

    #[test]
    fn cross_ambient_product_is_rejected() {
        let a = scroll(&[0, 0]);
        let b = scroll(&[0, 1]);
        let err = a.zeta().unwrap().checked_mul(&b.zeta().unwrap()).unwrap_err();
        assert!(matches!(err, ChowError::AmbientMismatch { .. }));
    }

    #[test]
    fn overflow_is_an_error() {
        let a = scroll(&[0, 0]);
        let z = a.zeta().unwrap().scaled(i64::MAX).unwrap();
        assert_eq!(z.scaled(2), Err(ChowError::Overflow));
    }

    #[test]
    fn quadric_surface_canonical() {
        let a = scroll(&[0, 0]);
        let k = a.canonical_class().unwrap();
        assert_eq!(k.to_string(), "-2*z - 2*F");
        assert_eq!(k.pow(2).unwrap().integrate().unwrap(), 8);
    }

    #[test]
    fn printing() {
        let a = scroll(&[0, 0, 0, 0]);
        assert_eq!(ChowElement::zero(&a, 1).to_string(), "0");
        let x = a.zeta().unwrap().scaled(-3).unwrap();
        assert_eq!(x.to_string(), "-3*z");
    }
}
