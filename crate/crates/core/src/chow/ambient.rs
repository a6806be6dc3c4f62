use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::base::{BaseExponents, BaseKind};
use super::element::{fmt_terms, ChowElement, Monomial};
use super::{add, mul, ChowError, Result};

pub(crate) type BasePoly = BTreeMap<BaseExponents, i64>;

/// A projective bundle `P(V)` over one of the supported bases, or the base
/// itself (rank 1, no tautological class).
///
/// Cheap to clone; all clones share the precomputed relation tables.
#[derive(Clone)]
pub struct Ambient(Arc<Inner>);

struct Inner {
    base: BaseKind,
    rank: u32,
    /// `chern[i]` is `c_{i+1}(V)` as a base polynomial.
    chern: Vec<BasePoly>,
    twists: Option<Vec<BasePoly>>,
    /// Row `s` expresses `z^s` as `sum_j row[j] * z^j` with `j < rank`.
    zeta_table: Vec<Vec<BasePoly>>,
}

impl Ambient {
    /// The base variety itself.
    pub fn base(kind: BaseKind) -> Ambient {
        Ambient(Arc::new(Inner {
            base: kind,
            rank: 1,
            chern: Vec::new(),
            twists: None,
            zeta_table: Vec::new(),
        }))
    }

    /// `P(O(L_1) + ... + O(L_r))` over `kind`, where the `L_i` are degree-1
    /// classes on the plain base.
    pub fn tower(kind: BaseKind, twists: &[ChowElement]) -> Result<Ambient> {
        if twists.is_empty() {
            return Err(ChowError::EmptyTwists);
        }
        let plain = Ambient::base(kind);
        for (index, twist) in twists.iter().enumerate() {
            if twist.ambient() != &plain {
                return Err(ChowError::TwistNotOnBase {
                    index,
                    base: kind.to_string(),
                });
            }
            if twist.grade() != 1 {
                return Err(ChowError::NotADivisor(twist.grade()));
            }
        }
        let rank = twists.len() as u32;
        if rank < 2 {
            return Err(ChowError::RankTooSmall(rank));
        }
        // elementary symmetric functions e_1..e_r of the twists
        let mut elementary: Vec<ChowElement> = (0..=rank)
            .map(|k| {
                if k == 0 {
                    ChowElement::one(&plain)
                } else {
                    ChowElement::zero(&plain, k)
                }
            })
            .collect();
        for twist in twists {
            for k in (1..=rank as usize).rev() {
                let term = elementary[k - 1].checked_mul(twist)?;
                elementary[k] = elementary[k].checked_add(&term)?;
            }
        }
        let chern = elementary[1..].iter().map(base_poly_of).collect();
        let twists = twists.iter().map(base_poly_of).collect();
        Ambient::build(kind, rank, chern, Some(twists))
    }

    /// `P(V)` for a bundle of the given rank known only through its Chern
    /// classes; `chern[i]` is `c_{i+1}(V)` on the plain base. Missing higher
    /// classes are zero.
    pub fn with_chern(kind: BaseKind, rank: u32, chern: &[ChowElement]) -> Result<Ambient> {
        if rank < 2 {
            return Err(ChowError::RankTooSmall(rank));
        }
        let plain = Ambient::base(kind);
        let mut polys = vec![BasePoly::new(); rank as usize];
        for (i, class) in chern.iter().enumerate().take(rank as usize) {
            if class.ambient() != &plain {
                return Err(ChowError::TwistNotOnBase {
                    index: i,
                    base: kind.to_string(),
                });
            }
            if class.grade() as usize != i + 1 {
                return Err(ChowError::ChernGrade {
                    index: i + 1,
                    grade: class.grade(),
                });
            }
            polys[i] = base_poly_of(class);
        }
        Ambient::build(kind, rank, polys, None)
    }

    fn build(
        base: BaseKind,
        rank: u32,
        chern: Vec<BasePoly>,
        twists: Option<Vec<BasePoly>>,
    ) -> Result<Ambient> {
        let r = rank as usize;
        let dim = base.dim() + rank - 1;
        let mut table: Vec<Vec<BasePoly>> = Vec::with_capacity(dim as usize + 1);
        for s in 0..=dim as usize {
            if s < r {
                let mut row = vec![BasePoly::new(); r];
                row[s].insert([0, 0], 1);
                table.push(row);
            } else if s == r {
                // z^r = sum_{i>=1} (-1)^(i+1) c_i z^(r-i)
                let mut row = vec![BasePoly::new(); r];
                for (i, c) in chern.iter().enumerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    accumulate_scaled(base, &mut row[r - 1 - i], c, [0, 0], sign)?;
                }
                table.push(row);
            } else {
                let prev = &table[s - 1];
                let mut row = vec![BasePoly::new(); r];
                for j in 0..r - 1 {
                    accumulate_scaled(base, &mut row[j + 1], &prev[j], [0, 0], 1)?;
                }
                let overflow = prev[r - 1].clone();
                let relation = table[r].clone();
                for (j, rel) in relation.iter().enumerate() {
                    for (&mono, &coeff) in &overflow {
                        accumulate_scaled(base, &mut row[j], rel, mono, coeff)?;
                    }
                }
                table.push(row);
            }
        }
        Ok(Ambient(Arc::new(Inner {
            base,
            rank,
            chern,
            twists,
            zeta_table: table,
        })))
    }

    pub fn base_kind(&self) -> BaseKind {
        self.0.base
    }

    /// Rank of `V`; 1 for a plain base.
    pub fn rank(&self) -> u32 {
        self.0.rank
    }

    pub fn dim(&self) -> u32 {
        self.0.base.dim() + self.0.rank - 1
    }

    pub fn is_tower(&self) -> bool {
        self.0.rank >= 2
    }

    pub fn picard_rank(&self) -> u32 {
        self.0.base.picard_rank() + u32::from(self.is_tower())
    }

    /// The plain base this ambient lives over.
    pub fn base_ambient(&self) -> Ambient {
        if self.is_tower() {
            Ambient::base(self.0.base)
        } else {
            self.clone()
        }
    }

    /// Generator by name: a base generator, or `z` for the tautological class.
    pub fn generator(&self, name: &str) -> Result<ChowElement> {
        let monomial = if name == "z" || name == "ζ" {
            if !self.is_tower() {
                return Err(self.unknown(name));
            }
            Monomial {
                base: [0, 0],
                zeta: 1,
            }
        } else {
            let idx = self
                .0
                .base
                .generator_index(name)
                .ok_or_else(|| self.unknown(name))?;
            let mut base = [0, 0];
            base[idx] = 1;
            Monomial { base, zeta: 0 }
        };
        ChowElement::from_terms(self, 1, [(monomial, 1)])
    }

    pub fn zeta(&self) -> Result<ChowElement> {
        self.generator("z")
    }

    fn unknown(&self, name: &str) -> ChowError {
        ChowError::UnknownGenerator {
            name: name.to_string(),
            ambient: self.to_string(),
        }
    }

    /// Pull a class back from the plain base.
    pub fn pullback(&self, class: &ChowElement) -> Result<ChowElement> {
        let plain = self.base_ambient();
        if class.ambient() != &plain {
            return Err(ChowError::AmbientMismatch {
                left: self.to_string(),
                right: class.ambient().to_string(),
            });
        }
        ChowElement::from_terms(self, class.grade(), class.terms())
    }

    /// The class of a base point pulled back (a fiber of the bundle).
    pub fn point(&self) -> ChowElement {
        let kind = self.0.base;
        let monomial = Monomial {
            base: kind.point(),
            zeta: 0,
        };
        ChowElement::from_terms(self, kind.dim(), [(monomial, 1)])
            .expect("the point monomial is normal")
    }

    /// `c_i(V)` pulled back; zero outside `1..=rank`.
    pub fn chern_class(&self, i: u32) -> ChowElement {
        let terms = (i >= 1)
            .then(|| self.0.chern.get(i as usize - 1))
            .flatten()
            .map(|poly| {
                poly.iter()
                    .map(|(&base, &c)| (Monomial { base, zeta: 0 }, c))
                    .collect::<Vec<_>>()
            })
            .unwrap_or_default();
        ChowElement::from_terms(self, i, terms).expect("Chern classes are homogeneous")
    }

    /// Canonical class of the base, pulled back.
    pub fn base_canonical(&self) -> ChowElement {
        let coeffs = self.0.base.canonical_coefficients();
        let terms = coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| {
            let mut base = [0, 0];
            base[i] = 1;
            (Monomial { base, zeta: 0 }, c)
        });
        ChowElement::from_terms(self, 1, terms.collect::<Vec<_>>())
            .expect("canonical coefficients are small")
    }

    /// `K = -r*z + K_base + c1(V)`; for a plain base just `K_base`.
    pub fn canonical_class(&self) -> Result<ChowElement> {
        let base_part = self.base_canonical();
        if !self.is_tower() {
            return Ok(base_part);
        }
        let relative = self.zeta()?.scaled(-i64::from(self.0.rank))?;
        relative
            .checked_add(&base_part)?
            .checked_add(&self.chern_class(1))
    }

    /// `K_A + X`: the ambient class restricting to `K_X` on a smooth member of `|X|`.
    pub fn adjunction(&self, divisor: &ChowElement) -> Result<ChowElement> {
        if divisor.grade() != 1 {
            return Err(ChowError::NotADivisor(divisor.grade()));
        }
        self.canonical_class()?.checked_add(divisor)
    }

    /// `H^n * X` for a hypersurface `X` of dimension `n = dim - 1`.
    pub fn polarized_degree(&self, divisor: &ChowElement, polarization: &ChowElement) -> Result<i64> {
        if divisor.grade() != 1 {
            return Err(ChowError::NotADivisor(divisor.grade()));
        }
        if polarization.grade() != 1 {
            return Err(ChowError::NotADivisor(polarization.grade()));
        }
        polarization
            .pow(self.dim() - 1)?
            .checked_mul(divisor)?
            .integrate()
    }

    /// Reduce a raw monomial `coeff * base * z^zeta` into `acc`.
    pub(crate) fn reduce_into(
        &self,
        acc: &mut BTreeMap<Monomial, i64>,
        base: BaseExponents,
        zeta: u32,
        coeff: i64,
    ) -> Result<()> {
        let kind = self.0.base;
        let Some((b, c)) = kind.reduce(base) else {
            return Ok(());
        };
        let coeff = mul(coeff, c)?;
        if zeta < self.0.rank {
            return bump(acc, Monomial { base: b, zeta }, coeff);
        }
        let Some(row) = self.0.zeta_table.get(zeta as usize) else {
            // beyond the top degree
            return Ok(());
        };
        for (j, poly) in row.iter().enumerate() {
            for (&m, &pc) in poly {
                let prod = [b[0] + m[0], b[1] + m[1]];
                if let Some((b2, c2)) = kind.reduce(prod) {
                    let value = mul(mul(coeff, pc)?, c2)?;
                    bump(
                        acc,
                        Monomial {
                            base: b2,
                            zeta: j as u32,
                        },
                        value,
                    )?;
                }
            }
        }
        Ok(())
    }

    /// Chern classes as stored (for oracles and diagnostics).
    pub fn chern_classes(&self) -> Vec<ChowElement> {
        (1..=self.0.rank).map(|i| self.chern_class(i)).collect()
    }
}

fn bump(acc: &mut BTreeMap<Monomial, i64>, m: Monomial, value: i64) -> Result<()> {
    if value == 0 {
        return Ok(());
    }
    let slot = acc.entry(m).or_insert(0);
    *slot = add(*slot, value)?;
    if *slot == 0 {
        acc.remove(&m);
    }
    Ok(())
}

/// `acc += scale * mono * poly`, reduced in the base ring.
fn accumulate_scaled(
    kind: BaseKind,
    acc: &mut BasePoly,
    poly: &BasePoly,
    mono: BaseExponents,
    scale: i64,
) -> Result<()> {
    for (&m, &c) in poly {
        let prod = [m[0] + mono[0], m[1] + mono[1]];
        if let Some((b, rc)) = kind.reduce(prod) {
            let value = mul(mul(c, scale)?, rc)?;
            let slot = acc.entry(b).or_insert(0);
            *slot = add(*slot, value)?;
            if *slot == 0 {
                acc.remove(&b);
            }
        }
    }
    Ok(())
}

fn base_poly_of(class: &ChowElement) -> BasePoly {
    class.terms().map(|(m, c)| (m.base, c)).collect()
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.rank == other.0.rank
                && self.0.chern == other.0.chern)
    }
}

impl Eq for Ambient {}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = self.0.base;
        if !self.is_tower() {
            return write!(f, "{kind}");
        }
        let render = |poly: &BasePoly| {
            fmt_terms(
                kind,
                poly.iter()
                    .map(|(&base, &c)| (Monomial { base, zeta: 0 }, c)),
            )
        };
        match &self.0.twists {
            Some(twists) => {
                let summands: Vec<String> = twists
                    .iter()
                    .map(|t| {
                        if t.is_empty() {
                            "O".to_string()
                        } else {
                            format!("O({})", render(t))
                        }
                    })
                    .collect();
                write!(f, "P({}) over {kind}", summands.join(" + "))
            }
            None => {
                let classes: Vec<String> = self
                    .0
                    .chern
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_empty())
                    .map(|(i, c)| format!("c{} = {}", i + 1, render(c)))
                    .collect();
                write!(f, "P(rank {}", self.0.rank)?;
                if !classes.is_empty() {
                    write!(f, "; {}", classes.join(", "))?;
                }
                write!(f, ") over {kind}")
            }
        }
    }
}

impl fmt::Debug for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ambient({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> Ambient {
        Ambient::base(BaseKind::P1)
    }

    #[test]
    fn tower_dimensions() {
        let base = p1();
        let zero = ChowElement::zero(&base, 1);
        let fiber = base.generator("F").unwrap();
        let a = Ambient::tower(BaseKind::P1, &[zero.clone(), zero.clone(), zero, fiber]).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.rank(), 4);
        assert_eq!(a.to_string(), "P(O + O + O + O(F)) over P1");
    }

    #[test]
    fn empty_and_foreign_twists_are_rejected() {
        assert_eq!(Ambient::tower(BaseKind::P2, &[]), Err(ChowError::EmptyTwists));
        let h = Ambient::base(BaseKind::P2).generator("h").unwrap();
        let err = Ambient::tower(BaseKind::P1, &[h.clone(), h]).unwrap_err();
        assert!(matches!(err, ChowError::TwistNotOnBase { index: 0, .. }));
    }

    #[test]
    fn single_twist_is_not_a_tower() {
        let f = p1().generator("F").unwrap();
        assert_eq!(Ambient::tower(BaseKind::P1, &[f]), Err(ChowError::RankTooSmall(1)));
    }

    #[test]
    fn twist_on_a_tower_is_rejected() {
        let base = p1();
        let zero = ChowElement::zero(&base, 1);
        let a = Ambient::tower(BaseKind::P1, &[zero.clone(), zero]).unwrap();
        let z = a.zeta().unwrap();
        assert!(Ambient::tower(BaseKind::P1, &[z.clone(), z]).is_err());
    }

    #[test]
    fn plain_base_has_no_tautological_class() {
        assert!(matches!(
            p1().zeta(),
            Err(ChowError::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn chern_data_tower_rejects_wrong_grades() {
        let base = Ambient::base(BaseKind::P2);
        let h = base.generator("h").unwrap();
        let err = Ambient::with_chern(BaseKind::P2, 2, &[h.clone(), h]).unwrap_err();
        assert_eq!(err, ChowError::ChernGrade { index: 2, grade: 1 });
    }
}
