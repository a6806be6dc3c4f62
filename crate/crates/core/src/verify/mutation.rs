//! Single-field corruptions of a catalog, for checking that verification
//! notices them.

use crate::catalog::Catalog;

#[derive(Debug, Clone)]
pub struct Mutation {
    pub subject: String,
    pub field: &'static str,
    pub description: String,
    pub catalog: Catalog,
}

/// `(id, field)` pairs left out of the sweep: the source gives these
/// degrees as bare data, with no construction to recompute them from and no
/// link to another record.
pub const NOT_RECOMPUTABLE: &[(&str, &str)] = &[
    ("thm3.1-1a", "degree"),
    ("thm3.1-1b", "degree"),
    ("thm3.1-1c", "degree"),
    ("thm3.1-1d", "degree"),
];

fn excluded(id: &str, field: &str) -> bool {
    NOT_RECOMPUTABLE.iter().any(|&(i, f)| i == id && f == field)
}

/// Every mutation in the sweep: degree +-1, index +1, Picard number +1,
/// dropped or redirected flop partner, dropped or redirected smoothing.
pub fn sweep(base: &Catalog) -> Vec<Mutation> {
    let mut out = Vec::new();
    for r in base.records() {
        let id = r.id.clone();
        let mut push = |field: &'static str, description: String, f: &dyn Fn(&mut crate::catalog::FamilyRecord)| {
            if excluded(&id, field) {
                return;
            }
            let mut c = base.clone();
            f(c.get_mut(&id).expect("present"));
            out.push(Mutation {
                subject: id.clone(),
                field,
                description,
                catalog: c,
            });
        };
        push("degree", format!("{id}: degree + 1"), &|r| r.degree += 1);
        push("degree", format!("{id}: degree - 1"), &|r| r.degree -= 1);
        push("index", format!("{id}: index + 1"), &|r| r.index += 1);
        push("picard", format!("{id}: picard + 1"), &|r| r.picard += 1);
        if let Some(p) = &r.flop_partner {
            push("flop_partner", format!("{id}: partner {p} dropped"), &|r| r.flop_partner = None);
            if p != &r.id {
                push("flop_partner", format!("{id}: partner {p} -> self"), &|r| {
                    r.flop_partner = Some(r.id.clone())
                });
            }
        }
        if let Some(s) = &r.smoothing {
            push("smoothing", format!("{id}: smoothing {s} dropped"), &|r| r.smoothing = None);
            let wrong = format!("thm2.1-{}", r.degree % 5 + 1);
            push("smoothing", format!("{id}: smoothing {s} -> {wrong}"), &|r| {
                r.smoothing = Some(wrong.clone())
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verifier;

    #[test]
    fn pristine_is_green_and_every_mutation_is_caught() {
        let v = Verifier::new();
        let base = Catalog::builtin();
        let green = v.verify(&base);
        assert!(green.is_green(), "{green}");
        let muts = sweep(&base);
        assert!(muts.len() >= 60);
        let survivors: Vec<&str> = muts
            .iter()
            .filter(|m| v.verify(&m.catalog).is_green())
            .map(|m| m.description.as_str())
            .collect();
        assert!(survivors.is_empty(), "{survivors:#?}");
    }
}
