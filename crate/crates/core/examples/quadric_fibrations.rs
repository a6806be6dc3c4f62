// The search over splitting types (a1,a2,a3,a4) of rank-4 bundles on P1.
//
// cargo run --example quadric_fibrations

use adp_core::enumerate::{enumerate_quadric_fibrations, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let all = enumerate_quadric_fibrations();
    println!("{} tuples searched", all.len());
    for v in &all {
        let tag = match &v.verdict {
            Verdict::Small { family, partner, .. } => format!("small {family}, flops to {partner}"),
            Verdict::Divisorial { inferred: false, .. } => "divisorial".to_string(),
            Verdict::Divisorial { inferred: true, .. } => "divisorial (inferred)".to_string(),
            _ => continue,
        };
        // recompute the degree on the tower itself
        let e = v.construction().evaluate()?;
        println!("  {:<14} d = {} (tower: {})  {tag}", v.label(), v.degree, e.degree);
    }
    Ok(())
}
