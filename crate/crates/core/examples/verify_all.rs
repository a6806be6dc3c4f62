// Run every check and show the summary plus anything not passing.
//
// cargo run --example verify_all

use adp_core::catalog::Catalog;
use adp_core::verify::{mutation, Status, Verifier};

fn main() {
    let v = Verifier::new();
    let report = v.verify(&Catalog::builtin());
    let s = report.summary;
    println!("{} passed, {} failed, {} skipped", s.pass, s.fail, s.skipped);
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        println!("FAIL {} {}: expected {}, computed {}", c.subject, c.name, c.expected, c.computed);
    }
    for note in &report.notes {
        println!("note: {note}");
    }

    let muts = mutation::sweep(&Catalog::builtin());
    let caught = muts.iter().filter(|m| !v.verify(&m.catalog).is_green()).count();
    println!("mutation sweep: {caught} of {} caught", muts.len());
}
