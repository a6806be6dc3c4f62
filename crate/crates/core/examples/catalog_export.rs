// Look records up and write the catalog as JSON and CSV.
//
// cargo run --example catalog_export

use adp_core::catalog::{self, Catalog, ExportFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Catalog::builtin();
    println!("{} records", c.len());
    for key in ["thm3.4-4", "V_{2,5}", "thm4.1-2-f2-c7"] {
        let r = catalog::lookup(key).ok_or("missing record")?;
        println!("{key:<16} -> {} d = {} rho = {} ({})", r.id, r.degree, r.picard, r.citation);
    }
    let dir = std::env::temp_dir().join("adp-catalog-export");
    std::fs::create_dir_all(&dir)?;
    for (format, name) in [(ExportFormat::Json, "catalog.json"), (ExportFormat::Csv, "catalog.csv")] {
        let bytes = c.export(format)?;
        std::fs::write(dir.join(name), &bytes)?;
        println!("wrote {} bytes to {}", bytes.len(), dir.join(name).display());
    }
    let back = Catalog::from_json(&c.to_json())?;
    println!("JSON round trip equal: {}", back == c);
    Ok(())
}
