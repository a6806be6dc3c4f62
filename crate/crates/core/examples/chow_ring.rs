// Intersection numbers on the bundle towers used in the classification.
//
// cargo run --example chow_ring

use adp_core::chow::{Ambient, BaseKind, ChowElement, Result};

fn tower(kind: BaseKind, twists: &[&str]) -> Result<Ambient> {
    let base = Ambient::base(kind);
    let twists = twists
        .iter()
        .map(|t| base.parse_with_grade(t, 1))
        .collect::<Result<Vec<ChowElement>>>()?;
    Ambient::tower(kind, &twists)
}

fn report(label: &str, ambient: &Ambient, divisor: &str, polarization: &str) -> Result<()> {
    let x = ambient.divisor(divisor)?;
    let h = ambient.divisor(polarization)?;
    let k = ambient.adjunction(&x)?;
    let d = ambient.polarized_degree(&x, &h)?;
    println!("{label}");
    println!("  ambient      {ambient}");
    println!("  K_A + X      {k}");
    println!("  H^n.X        {d}");
    Ok(())
}

fn main() -> Result<()> {
    let scroll = tower(BaseKind::P1, &["0", "1*F", "F", "F"])?;
    report("quadric fibration in F(0,1,1,1)", &scroll, "2z - F", "z")?;

    let w = tower(BaseKind::P1xP2, &["h + p", "0", "0", "0"])?;
    report("degree-5 fivefold in P(O(1,1) + O^3)", &w, "z + h", "z")?;

    let w = tower(BaseKind::P2, &["2h", "0", "0", "0"])?;
    report("hypothetical (4,6) case", &w, "z + h", "z")?;

    let w = tower(BaseKind::Hirzebruch(1), &["C0 + 2f", "0", "0", "0"])?;
    report("(4,5) case over F1", &w, "z + C0 + f", "z")?;

    // rank-2 bundle on P2 known by Chern data: c1 = -h, c2 = 3
    let p2 = Ambient::base(BaseKind::P2);
    let bundle = Ambient::with_chern(
        BaseKind::P2,
        2,
        &[p2.parse("-h")?, p2.parse("3*h^2")?],
    )?;
    let h = bundle.divisor("z + 2h")?;
    println!("P1-bundle over P2 with c1 = -1, c2 = 3");
    println!("  K            {}", bundle.canonical_class()?);
    println!("  H^3          {}", h.pow(3)?.integrate()?);
    Ok(())
}
