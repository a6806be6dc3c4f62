//! A small reader for the printed form, e.g. `2*z - F`, `z + C0 + f`, `h^2`.

use super::ambient::Ambient;
use super::element::{ChowElement, Monomial};
use super::{ChowError, Result};

impl Ambient {
    /// Parse a homogeneous class; the grade is taken from the terms.
    /// A bare `0` has no grade, use [`Ambient::parse_with_grade`] for it.
    pub fn parse(&self, input: &str) -> Result<ChowElement> {
        let terms = self.parse_terms(input)?;
        let Some(first) = terms.first() else {
            return Err(parse_error(input, "zero has no grade; give it one explicitly"));
        };
        let grade = first.0.degree();
        ChowElement::from_terms(self, grade, terms)
    }

    pub fn parse_with_grade(&self, input: &str, grade: u32) -> Result<ChowElement> {
        let terms = self.parse_terms(input)?;
        ChowElement::from_terms(self, grade, terms)
    }

    /// Parse a degree-1 class.
    pub fn divisor(&self, input: &str) -> Result<ChowElement> {
        let class = self.parse_with_grade(input, 1)?;
        Ok(class)
    }

    fn parse_terms(&self, input: &str) -> Result<Vec<(Monomial, i64)>> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_error(input, "empty input"));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let sign = match rest.as_bytes()[0] {
                b'+' => {
                    rest = &rest[1..];
                    1
                }
                b'-' => {
                    rest = &rest[1..];
                    -1
                }
                _ if first => 1,
                _ => return Err(parse_error(input, "expected + or -")),
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            if term.is_empty() {
                return Err(parse_error(input, "dangling sign"));
            }
            if let Some(t) = self.parse_term(input, term, sign)? {
                terms.push(t);
            }
            rest = tail;
        }
        Ok(terms)
    }

    fn parse_term(&self, input: &str, term: &str, sign: i64) -> Result<Option<(Monomial, i64)>> {
        let digits = term.bytes().take_while(u8::is_ascii_digit).count();
        let (coeff, mut factors) = if digits > 0 {
            let c: i64 = term[..digits]
                .parse()
                .map_err(|_| parse_error(input, "coefficient out of range"))?;
            (c, &term[digits..])
        } else {
            (1, term)
        };
        if let Some(stripped) = factors.strip_prefix('*') {
            if digits == 0 {
                return Err(parse_error(input, "leading '*'"));
            }
            factors = stripped;
        }
        let mut monomial = Monomial {
            base: [0, 0],
            zeta: 0,
        };
        if !factors.is_empty() {
            for factor in factors.split('*') {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u32 = e
                            .parse()
                            .map_err(|_| parse_error(input, "bad exponent"))?;
                        (n, e)
                    }
                    None => (factor, 1),
                };
                if name.is_empty() {
                    return Err(parse_error(input, "missing generator name"));
                }
                if name == "z" || name == "ζ" {
                    if !self.is_tower() {
                        return Err(ChowError::UnknownGenerator {
                            name: name.into(),
                            ambient: self.to_string(),
                        });
                    }
                    monomial.zeta += exp;
                } else {
                    let g = self.generator(name)?;
                    let (m, _) = g.terms().next().expect("generators are nonzero");
                    let idx = if m.base[0] == 1 { 0 } else { 1 };
                    monomial.base[idx] += exp;
                }
            }
        } else if digits == 0 {
            return Err(parse_error(input, "empty term"));
        }
        let value = coeff
            .checked_mul(sign)
            .ok_or(ChowError::Overflow)?;
        Ok((value != 0).then_some((monomial, value)))
    }
}

fn parse_error(input: &str, reason: &str) -> ChowError {
    ChowError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::BaseKind;
    use super::*;

    fn p1xp2_tower() -> Ambient {
        let base = Ambient::base(BaseKind::P1xP2);
        let o1 = base.parse("h + p").unwrap();
        let zero = ChowElement::zero(&base, 1);
        Ambient::tower(BaseKind::P1xP2, &[o1, zero.clone(), zero.clone(), zero]).unwrap()
    }

    #[test]
    fn round_trips_printed_form() {
        let a = p1xp2_tower();
        for s in ["-3*z - h - p", "z + h", "2*z^2 - h*p", "p*h^2*z^3"] {
            let x = a.parse(s).unwrap();
            assert_eq!(a.parse(&x.to_string()).unwrap(), x);
        }
    }

    #[test]
    fn implicit_multiplication_by_coefficient() {
        let a = p1xp2_tower();
        assert_eq!(a.parse("2z").unwrap(), a.parse("2*z").unwrap());
    }

    #[test]
    fn zero_needs_a_grade() {
        let a = p1xp2_tower();
        assert!(a.parse("0").is_err());
        assert!(a.parse_with_grade("0", 1).unwrap().is_zero());
    }

    #[test]
    fn unknown_generator() {
        let a = Ambient::base(BaseKind::P2);
        assert!(matches!(
            a.parse("F"),
            Err(ChowError::UnknownGenerator { .. })
        ));
        assert!(matches!(a.parse("z"), Err(ChowError::UnknownGenerator { .. })));
    }

    #[test]
    fn malformed_input() {
        let a = Ambient::base(BaseKind::P2);
        for s in ["", "h +", "h^", "*h", "h**h", "2 h h"] {
            assert!(a.parse(s).is_err(), "{s:?} should not parse");
        }
    }
}
