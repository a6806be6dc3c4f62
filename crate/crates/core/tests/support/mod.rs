// Shared test helpers. Not every test target uses every item.
#![allow(dead_code)]

pub mod oracle;

use adp_core::chow::{Ambient, BaseKind, ChowElement, Monomial};

/// An ambient described by plain numbers, so that the oracle and the engine
/// are built from the same data independently.
#[derive(Debug, Clone)]
pub struct Spec {
    pub kind: BaseKind,
    pub data: SpecData,
}

#[derive(Debug, Clone)]
pub enum SpecData {
    Plain,
    /// Coefficients of each twist on the base generators.
    Twists(Vec<[i64; 2]>),
    /// Rank, `c1` coefficients and `c2` as a multiple of the point class.
    Chern(u32, [i64; 2], i64),
}

fn divisor(base: &Ambient, c: [i64; 2]) -> ChowElement {
    let terms = [(Monomial { base: [1, 0], zeta: 0 }, c[0]), (Monomial { base: [0, 1], zeta: 0 }, c[1])];
    let terms = terms.into_iter().filter(|&(_, k)| k != 0);
    ChowElement::from_terms(base, 1, terms).unwrap()
}

impl Spec {
    pub fn engine(&self) -> Ambient {
        let base = Ambient::base(self.kind);
        match &self.data {
            SpecData::Plain => base,
            SpecData::Twists(t) => {
                let twists: Vec<ChowElement> = t.iter().map(|&c| divisor(&base, c)).collect();
                Ambient::tower(self.kind, &twists).unwrap()
            }
            SpecData::Chern(rank, c1, c2) => {
                let c2 = base.point().scaled(*c2).unwrap();
                Ambient::with_chern(self.kind, *rank, &[divisor(&base, *c1), c2]).unwrap()
            }
        }
    }

    pub fn oracle(&self) -> oracle::Oracle {
        match &self.data {
            SpecData::Plain => oracle::Oracle::new(self.kind, 1, Vec::new()),
            SpecData::Twists(t) => oracle::Oracle::from_twists(self.kind, t),
            SpecData::Chern(rank, c1, c2) => oracle::Oracle::from_chern(self.kind, *rank, *c1, *c2),
        }
    }
}

/// Plain bases, split towers and towers known by Chern data, over every
/// supported base.
pub fn specs() -> Vec<Spec> {
    use BaseKind::*;
    use SpecData::*;
    let s = |kind, data| Spec { kind, data };
    vec![
        s(P1, Plain),
        s(P2, Plain),
        s(P1xP1, Plain),
        s(Hirzebruch(1), Plain),
        s(Hirzebruch(2), Plain),
        s(P1xP2, Plain),
        s(P1, Twists(vec![[0, 0], [1, 0], [1, 0], [1, 0]])),
        s(P1, Twists(vec![[-1, 0], [0, 0], [0, 0], [1, 0]])),
        s(P1, Twists(vec![[2, 0], [5, 0]])),
        s(P2, Twists(vec![[0, 0], [1, 0]])),
        s(P2, Twists(vec![[2, 0], [0, 0], [0, 0], [0, 0]])),
        s(P2, Twists(vec![[-1, 0], [3, 0], [1, 0]])),
        s(P1xP1, Twists(vec![[0, 0], [0, 0]])),
        s(P1xP1, Twists(vec![[1, 0], [1, 2]])),
        s(Hirzebruch(1), Twists(vec![[1, 2], [0, 0], [0, 0], [0, 0]])),
        s(Hirzebruch(2), Twists(vec![[1, 0], [0, 1]])),
        s(Hirzebruch(3), Twists(vec![[2, 1], [1, 3], [0, 0]])),
        s(P1xP2, Twists(vec![[1, 1], [0, 0], [0, 0], [0, 0]])),
        s(P1xP2, Twists(vec![[2, -1], [0, 1]])),
        s(P2, Chern(2, [-1, 0], 3)),
        s(P2, Chern(3, [3, 0], 4)),
        s(P1xP1, Chern(2, [2, 2], 5)),
        s(Hirzebruch(2), Chern(3, [2, 4], 7)),
    ]
}
