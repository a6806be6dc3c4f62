// P1-bundles P(F) over P2 with -K = 2H: the c2 window and the excluded cases.
//
// cargo run --example p2_bundles

use adp_core::enumerate::enumerate_p2_bundles;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = enumerate_p2_bundles()?;
    for c in &e.candidates {
        let h0 = c.h0.map_or(0, |s| s.value);
        println!(
            "{:<16} d = {}  h0(H) = {}  partner {}",
            c.label,
            c.degree,
            h0,
            c.partner.as_deref().unwrap_or("-")
        );
    }
    for x in &e.exclusions {
        let values: Vec<String> = x.values.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        println!("excluded {:<8} {} ({})", x.label, x.reason, values.join(", "));
    }
    Ok(())
}
