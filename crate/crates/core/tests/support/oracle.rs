// Brute-force intersection numbers: keep raw monomials in the base
// generators and z, and rewrite with one defining relation at a time, in a
// random order, until nothing applies.

use std::collections::BTreeMap;

use adp_core::chow::BaseKind;
use rand::rngs::StdRng;
use rand::Rng;

/// Exponents of (first generator, second generator, z).
pub type Mono = [u32; 3];
pub type Poly = BTreeMap<Mono, i64>;

#[derive(Debug, Clone)]
pub struct Oracle {
    kind: BaseKind,
    rank: u32,
    /// `chern[i]` is `c_{i+1}` as a polynomial in the base generators.
    chern: Vec<Poly>,
}

fn add_to(p: &mut Poly, m: Mono, c: i64) {
    if c == 0 {
        return;
    }
    let e = p.entry(m).or_insert(0);
    *e += c;
    if *e == 0 {
        p.remove(&m);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_to(&mut out, [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]], ca * cb);
        }
    }
    out
}

fn linear(c: [i64; 2]) -> Poly {
    let mut p = Poly::new();
    add_to(&mut p, [1, 0, 0], c[0]);
    add_to(&mut p, [0, 1, 0], c[1]);
    p
}

/// Exponents of the point class of the base.
fn point(kind: BaseKind) -> [u32; 2] {
    match kind {
        BaseKind::P1 => [1, 0],
        BaseKind::P2 => [2, 0],
        BaseKind::P1xP1 | BaseKind::Hirzebruch(_) => [1, 1],
        BaseKind::P1xP2 => [1, 2],
    }
}

enum Rule {
    Kill,
    /// `C0^2 -> -e C0 f`
    Hirzebruch(i64),
    /// `z^r -> sum (-1)^(i+1) c_i z^(r-i)`
    Grothendieck,
}

impl Oracle {
    pub fn new(kind: BaseKind, rank: u32, chern: Vec<Poly>) -> Oracle {
        Oracle { kind, rank, chern }
    }

    pub fn from_twists(kind: BaseKind, twists: &[[i64; 2]]) -> Oracle {
        let r = twists.len();
        let mut e = vec![Poly::new(); r + 1];
        e[0].insert([0, 0, 0], 1);
        for t in twists {
            let l = linear(*t);
            for k in (1..=r).rev() {
                let term = mul(&e[k - 1], &l);
                for (m, c) in term {
                    add_to(&mut e[k], m, c);
                }
            }
        }
        Oracle::new(kind, r as u32, e[1..].to_vec())
    }

    pub fn from_chern(kind: BaseKind, rank: u32, c1: [i64; 2], c2: i64) -> Oracle {
        let mut chern = vec![Poly::new(); rank as usize];
        chern[0] = linear(c1);
        let [a, b] = point(kind);
        add_to(&mut chern[1], [a, b, 0], c2);
        Oracle::new(kind, rank, chern)
    }

    pub fn dim(&self) -> u32 {
        let base = match self.kind {
            BaseKind::P1 => 1,
            BaseKind::P1xP2 => 3,
            _ => 2,
        };
        base + self.rank - 1
    }

    fn rules_for(&self, m: &Mono) -> Vec<Rule> {
        let [a, b, z] = *m;
        let mut rules = Vec::new();
        let dead = match self.kind {
            BaseKind::P1 => a >= 2 || b > 0,
            BaseKind::P2 => a >= 3 || b > 0,
            BaseKind::P1xP1 => a >= 2 || b >= 2,
            BaseKind::Hirzebruch(_) => b >= 2,
            BaseKind::P1xP2 => a >= 2 || b >= 3,
        };
        if dead {
            rules.push(Rule::Kill);
        }
        if let BaseKind::Hirzebruch(e) = self.kind {
            if a >= 2 {
                rules.push(Rule::Hirzebruch(i64::from(e)));
            }
        }
        if self.rank >= 2 && z >= self.rank {
            rules.push(Rule::Grothendieck);
        } else if self.rank == 1 && z > 0 {
            rules.push(Rule::Kill);
        }
        rules
    }

    fn apply(&self, rule: &Rule, m: Mono, c: i64, out: &mut Poly) {
        match rule {
            Rule::Kill => {}
            Rule::Hirzebruch(e) => add_to(out, [m[0] - 1, m[1] + 1, m[2]], -e * c),
            Rule::Grothendieck => {
                let r = self.rank;
                let rest = [m[0], m[1], m[2] - r];
                for (i, ci) in self.chern.iter().enumerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let zpow = r - 1 - i as u32;
                    for (cm, cc) in ci {
                        add_to(out, [rest[0] + cm[0], rest[1] + cm[1], rest[2] + zpow], sign * c * cc);
                    }
                }
            }
        }
    }

    /// Rewrite until no relation applies, choosing the monomial and the
    /// relation at random each step.
    pub fn reduce(&self, mut p: Poly, rng: &mut StdRng) -> Poly {
        loop {
            let reducible: Vec<Mono> = p.keys().copied().filter(|m| !self.rules_for(m).is_empty()).collect();
            if reducible.is_empty() {
                return p;
            }
            let m = reducible[rng.random_range(0..reducible.len())];
            let c = p.remove(&m).expect("present");
            let rules = self.rules_for(&m);
            let rule = &rules[rng.random_range(0..rules.len())];
            self.apply(rule, m, c, &mut p);
        }
    }

    /// Degree of a top-dimensional monomial.
    pub fn integrate(&self, m: Mono, rng: &mut StdRng) -> i64 {
        let reduced = self.reduce(Poly::from([(m, 1)]), rng);
        let [a, b] = point(self.kind);
        let top: Mono = [a, b, self.rank - 1];
        for (k, c) in &reduced {
            assert!(k == &top || *c == 0, "unreduced top-degree monomial {k:?}");
        }
        reduced.get(&top).copied().unwrap_or(0)
    }

    /// A random monomial of top degree using only the generators the base has.
    pub fn random_top_monomial(&self, rng: &mut StdRng) -> Mono {
        let top = self.dim();
        let gens = if matches!(self.kind, BaseKind::P1 | BaseKind::P2) { 1 } else { 2 };
        let z = if self.rank >= 2 { rng.random_range(0..=top) } else { 0 };
        let base = top - z;
        let a = if gens == 2 { rng.random_range(0..=base) } else { base };
        [a, base - a, z]
    }
}
