// Blowing up general points: one family per Picard-one del Pezzo threefold,
// and how far a blow-up chain can go in each dimension.
//
// cargo run --example point_blowups

use adp_core::bundle::{blowup_chain, blowup_degree};
use adp_core::enumerate::enumerate_point_blowups;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for c in enumerate_point_blowups()?.candidates {
        println!("{:<12} d = {}  rho = {}", c.label, c.degree, c.picard);
    }
    for d in 1..=5 {
        let steps = blowup_chain(3, d)?;
        let degrees: Vec<i64> = steps.iter().map(|s| s.degree).collect();
        println!("chain from (3, {d}): {} steps {degrees:?}", steps.len());
    }
    let last = blowup_degree(4, 1)?;
    println!("(4, 1) -> degree {}, valid {}", last.degree, last.valid);
    Ok(())
}
