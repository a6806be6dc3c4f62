// Candidates in dimension n >= 4. Pass the dimension as an argument
// (default 4).
//
// cargo run --example higher_dimensions -- 5

use std::collections::BTreeMap;

use adp_core::enumerate::enumerate_highdim;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).map_or(Ok(4), |s| s.parse())?;
    show(n)
}

fn show(n: u32) -> Result<(), Box<dyn std::error::Error>> {
    let e = enumerate_highdim(n)?;
    let mut by_degree: BTreeMap<i64, usize> = BTreeMap::new();
    for c in &e.candidates {
        *by_degree.entry(c.degree).or_default() += 1;
    }
    println!("n = {n}: {} candidates", e.candidates.len());
    for (d, count) in by_degree {
        println!("  d = {d}: {count}");
    }
    for c in e.candidates.iter().filter(|c| !c.label.starts_with("Bl_")) {
        println!("  {} -> d = {}", c.construction, c.degree);
    }
    for x in &e.exclusions {
        println!("excluded {}: {} [{}]", x.label, x.reason, x.citation);
    }
    Ok(())
}
