// P1-bundles over P1xP1 and F2 with c1(F) = -K_S (Picard number three).
//
// cargo run --example rho3_bundles

use adp_core::chow::BaseKind;
use adp_core::enumerate::enumerate_rho3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for surface in [BaseKind::P1xP1, BaseKind::Hirzebruch(2)] {
        let e = enumerate_rho3(surface)?;
        println!("over {surface}: degrees {:?}", e.degrees());
        for c in &e.candidates {
            println!("  {:<12} {}", c.label, c.notes.join("; "));
        }
        for x in &e.exclusions {
            println!("  excluded {}: {} {:?}", x.label, x.reason, x.values);
        }
    }
    Ok(())
}
