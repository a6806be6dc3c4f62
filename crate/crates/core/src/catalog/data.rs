use super::{AnticanonicalMap as Map, Contraction as C, FamilyRecord};

struct Row {
    id: &'static str,
    dim: u32,
    degree: i64,
    picard: u32,
    contraction: C,
    map: Map,
    partner: Option<&'static str>,
    smoothing: Option<&'static str>,
    citation: &'static str,
    notes: &'static str,
}

impl Row {
    fn record(self) -> FamilyRecord {
        FamilyRecord {
            id: self.id.into(),
            dim: self.dim,
            degree: self.degree,
            picard: self.picard,
            index: self.dim - 1,
            contraction: self.contraction,
            anticanonical_map: self.map,
            flop_partner: self.partner.map(Into::into),
            smoothing: self.smoothing.map(Into::into),
            citation: self.citation.into(),
            notes: self.notes.into(),
        }
    }
}

fn smooth(id: &'static str, degree: i64, picard: u32, citation: &'static str, notes: &'static str) -> Row {
    Row {
        id,
        dim: 3,
        degree,
        picard,
        contraction: C::Fano,
        map: Map::Ample,
        partner: None,
        smoothing: None,
        citation,
        notes,
    }
}

fn divisorial(id: &'static str, degree: i64, contraction: C, citation: &'static str, notes: &'static str) -> Row {
    Row {
        id,
        dim: 3,
        degree,
        picard: 2,
        contraction,
        map: Map::Divisorial,
        partner: None,
        smoothing: None,
        citation,
        notes,
    }
}

#[allow(clippy::too_many_arguments)]
fn small(
    id: &'static str,
    degree: i64,
    contraction: C,
    partner: &'static str,
    smoothing: &'static str,
    citation: &'static str,
    notes: &'static str,
) -> Row {
    Row {
        id,
        dim: 3,
        degree,
        picard: 2,
        contraction,
        map: Map::Small,
        partner: Some(partner),
        smoothing: Some(smoothing),
        citation,
        notes,
    }
}

fn rho3(surface: &str, c2: i64) -> FamilyRecord {
    let tag = if surface == "P1xP1" { "p1p1" } else { "f2" };
    let mut notes = format!("P(F) over {surface}, c1(F) = -K_S, c2(F) = {c2}");
    if c2 == 0 {
        notes.push_str("; split case F = -K_S + O_S");
    } else {
        notes.push_str("; Z: two points on a ruling line, the rest general");
        notes.push_str("; small anticanonical map (inferred)");
    }
    if c2 == 2 && surface == "P1xP1" {
        notes.push_str("; contains the uniform split bundles O(1,2) + O(1,0) and O(2,1) + O(0,1)");
    }
    if c2 == 2 && surface == "F2" {
        notes.push_str("; contains the split bundle O(C0 + 3f) + O(C0 + f)");
    }
    if c2 == 7 {
        notes.push_str("; d = 1, |H| has a base point");
    }
    if surface == "F2" {
        notes.push_str("; mirrors the P1xP1 argument (omitted in the source)");
    }
    FamilyRecord {
        id: format!("thm4.1-2-{tag}-c{c2}"),
        dim: 3,
        degree: 8 - c2,
        picard: 3,
        index: 2,
        contraction: C::P1Bundle,
        anticanonical_map: if c2 == 0 { Map::Divisorial } else { Map::Small },
        flop_partner: None,
        smoothing: None,
        citation: "Theorem 4.1(2)".into(),
        notes,
    }
}

fn highdim(id: &'static str, dim: u32, degree: i64, contraction: C, map: Map, citation: &'static str, notes: &'static str) -> Row {
    Row {
        id,
        dim,
        degree,
        picard: if contraction == C::Fano { 1 } else { 2 },
        contraction,
        map,
        partner: None,
        smoothing: None,
        citation,
        notes,
    }
}

pub(super) fn records() -> Vec<FamilyRecord> {
    let mut rows = vec![
        smooth("thm2.1-1", 1, 1, "Theorem 2.1(1)", "V_{2,1}: double cover of the Veronese cone branched along a cubic"),
        smooth("thm2.1-2", 2, 1, "Theorem 2.1(2)", "V_{2,2}: double cover of P3 branched along a quartic"),
        smooth("thm2.1-3", 3, 1, "Theorem 2.1(3)", "V_{2,3}: cubic in P4"),
        smooth("thm2.1-4", 4, 1, "Theorem 2.1(4)", "V_{2,4}: complete intersection of two quadrics in P5"),
        smooth("thm2.1-5", 5, 1, "Theorem 2.1(5)", "V_{2,5}: linear section of the Grassmannian Gr(2,5) in P9; n <= 6"),
        smooth("thm2.1-6a", 6, 2, "Theorem 2.1(6)(a)", "P(T_P2)"),
        smooth("thm2.1-6b", 6, 3, "Theorem 2.1(6)(b)", "P1 x P1 x P1 (P2 x P2 in dimension 4)"),
        smooth("thm2.1-7", 7, 2, "Theorem 2.1(7)", "blow-up of P3 in a point = P(O + O(1)) over P2"),
        smooth("thm2.1-8", 8, 1, "Theorem 2.1(8)", "P3 with H = O(2)"),
        divisorial("thm3.1-1a", 1, C::QuadricFibration, "Theorem 3.1(1)(a)", "JPR A.2.12; X' double cover of the Veronese cone, singular along a rational quartic curve"),
        divisorial("thm3.1-1b", 2, C::QuadricFibration, "Theorem 3.1(1)(b)", "JPR A.2.15; X' double cover of P3, singular along a conic"),
        divisorial("thm3.1-1c", 2, C::QuadricFibration, "Theorem 3.1(1)(c)", "JPR A.2.9; X' double cover of P3, singular along an elliptic quartic curve"),
        divisorial("thm3.1-1d", 4, C::QuadricFibration, "Theorem 3.1(1)(d)", "JPR A.2.14; X' quadric in P(1^2, 2^3), singular along a conic"),
        divisorial("thm3.1-2a", 3, C::P1Bundle, "Theorem 3.1(2)(a)", "JPR A.3.3, A.3.4; F in M(-1,4) a stable Hulsbergen bundle; X' cubic in P4"),
        divisorial("thm3.1-2b", 6, C::P1Bundle, "Theorem 3.1(2)(b)", "JPR A.3.2; 0 -> O -> F -> I_p(-1) -> 0, so c1 = -1, c2 = 1"),
        divisorial("thm3.1-2c", 9, C::P1Bundle, "Theorem 3.1(2)(c)", "JPR A.3.1; F = O + O(3), normalized c1 = -1, c2 = -2; X' = P(1^3, 3)"),
        divisorial("thm3.1-3a", 1, C::PointBlowup, "Theorem 3.1(3)(a)", "JPR A.5.5, A.5.6; blow-up of a point on V_{2,2}"),
        divisorial("thm3.1-3b", 2, C::PointBlowup, "Theorem 3.1(3)(b)", "JPR A.5.7; blow-up of a point on V_{2,3}"),
        small("thm3.4-1", 2, C::QuadricFibration, "thm3.4-1", "thm2.1-2", "Theorem 3.4(1)", "(0,0,0,0)_2: X in |(2,2)| on P3 x P1; flop is an involution"),
        small("thm3.4-2", 3, C::QuadricFibration, "thm3.6-3", "thm2.1-3", "Theorem 3.4(2)", "(0,0,0,1)_1: X in |2z + F| on F(0^3,1)"),
        small("thm3.4-3", 4, C::QuadricFibration, "thm3.4-3", "thm2.1-4", "Theorem 3.4(3)", "(0,0,1,1)_0: X in |2z| on F(0^2,1^2); flop of the same type"),
        small("thm3.4-4", 5, C::QuadricFibration, "thm3.5-1", "thm2.1-5", "Theorem 3.4(4)", "(0,1,1,1)_-1: X in |2z - F| on F(0,1^3)"),
        small("thm3.4-5", 2, C::QuadricFibration, "thm3.4-5", "thm2.1-2", "Theorem 3.4(5)", "(-1,0,0,1)_2: X in |2z + 2F| on F(-1,0^2,1)"),
        small("thm3.4-6", 1, C::QuadricFibration, "thm3.4-6", "thm2.1-1", "Theorem 3.4(6)", "(-1,0,0,0)_3: X in |2z + 3F| on F(-1,0^3)"),
        small("thm3.5-1", 5, C::P1Bundle, "thm3.4-4", "thm2.1-5", "Theorem 3.5(1)", "P(F) over P2, c1 = -1, c2 = 2; one jumping line"),
        small("thm3.5-2", 4, C::P1Bundle, "thm3.6-4", "thm2.1-4", "Theorem 3.5(2)", "P(F) over P2, c1 = -1, c2 = 3; three jumping lines"),
        small("thm3.5-3", 3, C::P1Bundle, "thm3.5-3", "thm2.1-3", "Theorem 3.5(3)", "P(F) over P2, c1 = -1, c2 = 4; flop of the same type"),
        small("thm3.5-4", 2, C::P1Bundle, "thm3.5-4", "thm2.1-2", "Theorem 3.5(4)", "P(F) over P2, c1 = -1, c2 = 5"),
        small("thm3.6-1", 1, C::PointBlowup, "thm3.6-1", "thm2.1-1", "Theorem 3.6(1)", "blow-up of a general point on V_{2,2}"),
        small("thm3.6-2", 2, C::PointBlowup, "thm3.6-2", "thm2.1-2", "Theorem 3.6(2)", "blow-up of a general point on V_{2,3}"),
        small("thm3.6-3", 3, C::PointBlowup, "thm3.4-2", "thm2.1-3", "Theorem 3.6(3)", "blow-up of a general point on V_{2,4}"),
        small("thm3.6-4", 4, C::PointBlowup, "thm3.5-2", "thm2.1-4", "Theorem 3.6(4)", "blow-up of a general point on V_{2,5}"),
        highdim("prop5.1-1", 4, 1, C::Fano, Map::Ample, "Proposition 5.1(1)", "weighted hypersurface of degree 6 in P(3,2,1,...,1); any n >= 4, stored at n = 4"),
        highdim("prop5.1-2", 4, 2, C::Fano, Map::Ample, "Proposition 5.1(2)", "double cover of P_n branched along a quartic; any n >= 4, stored at n = 4"),
        highdim("prop5.1-3", 4, 3, C::Fano, Map::Ample, "Proposition 5.1(3)", "cubic in P_(n+1); any n >= 4, stored at n = 4"),
        highdim("prop5.1-4", 4, 4, C::Fano, Map::Ample, "Proposition 5.1(4)", "complete intersection of two quadrics in P_(n+2); any n >= 4, stored at n = 4"),
        highdim("prop5.1-5", 4, 5, C::Fano, Map::Ample, "Proposition 5.1(5)", "parametric: cones of degree d >= 5, stored with the representative d = 5"),
        highdim("prop5.1-6a", 4, 6, C::Fano, Map::Ample, "Proposition 5.1(6)", "(n,d) = (4,6); image of X~ in |z + h| on P(O(2) + O^3) over P2; never the model of a quadric bundle"),
        highdim("prop5.1-6b", 4, 5, C::Fano, Map::Ample, "Proposition 5.1(6)", "(n,d) = (4,5); the 9.14(6) variant, image of X~ in |z + C0 + f| on P(O(C0 + 2f) + O^3) over F1"),
        highdim("prop5.1-6c", 5, 5, C::Fano, Map::Ample, "Proposition 5.1(6)", "(n,d) = (5,5); singular hyperplane section of Gr(2,5)"),
        highdim("thm5.8-1", 4, 5, C::QuadricBundle, Map::Small, "Theorem 5.8(1)", "X' is a cone with a second small resolution P(F'(2) + O^(n-3)) over P2, F' with c1 = -1, c2 = 2; any n >= 4, stored at n = 4"),
        highdim("thm5.8-2", 5, 5, C::QuadricBundle, Map::Small, "Theorem 5.8(2)", "X' a singular hyperplane section of G(1,4); X contracts X~ in |z + h| on P(O(h + p) + O^3) over P1xP2"),
        highdim("thm5.8-3", 4, 5, C::QuadricBundle, Map::Small, "Theorem 5.8(3)", "hyperplane section of thm5.8-2; the statement prints H^5 = 4, the recomputed degree is H^4 = 5"),
    ];
    let mut out: Vec<FamilyRecord> = rows.drain(..).map(Row::record).collect();
    for surface in ["P1xP1", "F2"] {
        for c2 in [0, 2, 3, 4, 5, 6, 7] {
            out.push(rho3(surface, c2));
        }
    }
    out
}
