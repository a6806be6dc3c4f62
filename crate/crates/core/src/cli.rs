//! The `adp` command line. [`run`] takes the argument list and output
//! streams so that it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{self, Catalog, ExportFormat, FamilyRecord};
use crate::chow::BaseKind;
use crate::enumerate::{self, Enumeration, TupleVerdict, Verdict};
use crate::verify::{Section, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "adp", version, about = "Almost del Pezzo classification tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CaseArg {
    Quadric,
    P2bundle,
    Blowup,
    Rho3,
    Highdim,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SurfaceArg {
    P1xp1,
    F2,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SectionArg {
    Families,
    Flops,
    Smoothings,
    Constructions,
    Enumeration,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one of the classification searches.
    Enumerate {
        #[arg(long, value_enum)]
        case: CaseArg,
        /// Dimension for `highdim` (at least 4).
        #[arg(long, default_value_t = 4)]
        dim: u32,
        /// Base surface for `rho3`.
        #[arg(long, value_enum, default_value = "p1xp1")]
        surface: SurfaceArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check the catalog against recomputation.
    Verify {
        #[arg(long, value_enum)]
        only: Option<SectionArg>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print one catalog record (by id or `V_{2,d}` alias).
    Show {
        id: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Write the catalog.
    Export {
        #[arg(long, value_enum)]
        format: ExportArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parse `argv` (including the program name) and run. Returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Enumerate {
            case,
            dim,
            surface,
            format,
        } => {
            let text = enumerate_output(case, dim, surface, format)?;
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { only, format } => {
            let sections: Vec<Section> = match only {
                Some(s) => vec![section(s)],
                None => Section::ALL.to_vec(),
            };
            let report = Verifier::new().verify_sections(&Catalog::builtin(), &sections);
            match format {
                Format::Table => write!(out, "{report}")?,
                Format::Json => out.write_all(report.to_json().as_bytes())?,
            }
            Ok(if report.is_green() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Show { id, format } => {
            let record = catalog::lookup(&id).ok_or_else(|| usage(format!("no record {id:?}")))?;
            match format {
                Format::Table => out.write_all(show_table(&record).as_bytes())?,
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&record).map_err(usage)?;
                    s.push('\n');
                    out.write_all(s.as_bytes())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Export { format, out: path } => {
            let format = match format {
                ExportArg::Json => ExportFormat::Json,
                ExportArg::Csv => ExportFormat::Csv,
            };
            let bytes = catalog::export(format).map_err(usage)?;
            match path {
                Some(p) => std::fs::write(p, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn section(s: SectionArg) -> Section {
    match s {
        SectionArg::Families => Section::Families,
        SectionArg::Flops => Section::Flops,
        SectionArg::Smoothings => Section::Smoothings,
        SectionArg::Constructions => Section::Constructions,
        SectionArg::Enumeration => Section::Enumeration,
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(usage)?;
    s.push('\n');
    Ok(s)
}

fn enumerate_output(case: CaseArg, dim: u32, surface: SurfaceArg, format: Format) -> Result<String, Failure> {
    if let CaseArg::Quadric = case {
        let verdicts = enumerate::enumerate_quadric_fibrations();
        return match format {
            Format::Json => json(&verdicts),
            Format::Table => Ok(quadric_table(&verdicts)),
        };
    }
    let e = match case {
        CaseArg::P2bundle => enumerate::enumerate_p2_bundles(),
        CaseArg::Blowup => enumerate::enumerate_point_blowups(),
        CaseArg::Rho3 => enumerate::enumerate_rho3(match surface {
            SurfaceArg::P1xp1 => BaseKind::P1xP1,
            SurfaceArg::F2 => BaseKind::Hirzebruch(2),
        }),
        CaseArg::Highdim => enumerate::enumerate_highdim(dim),
        CaseArg::Quadric => unreachable!(),
    }
    .map_err(usage)?;
    match format {
        Format::Json => json(&e),
        Format::Table => Ok(candidate_table(&e)),
    }
}

/// Left-aligned columns, two spaces apart, widths taken from the content.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn quadric_table(verdicts: &[TupleVerdict]) -> String {
    let tuple_cells = |v: &TupleVerdict| -> Vec<String> {
        let mut cells: Vec<String> = v.bundle.degrees().iter().map(i64::to_string).collect();
        cells.push(v.alpha.to_string());
        cells.push(v.degree.to_string());
        cells
    };
    let small: Vec<Vec<String>> = verdicts
        .iter()
        .filter_map(|v| match &v.verdict {
            Verdict::Small { family, partner, .. } => {
                let mut cells = tuple_cells(v);
                cells.push(partner.clone());
                cells.push(family.clone());
                Some(cells)
            }
            _ => None,
        })
        .collect();
    let others: Vec<Vec<String>> = verdicts
        .iter()
        .filter_map(|v| {
            let (kind, reason) = match &v.verdict {
                Verdict::Small { .. } => return None,
                Verdict::Divisorial { reason, inferred } => (
                    if *inferred { "divisorial (inferred)" } else { "divisorial" },
                    reason,
                ),
                Verdict::RejectedRange { reason } => ("rejected: range", reason),
                Verdict::RejectedGeometric { reason } => ("rejected: geometric", reason),
            };
            let mut cells = tuple_cells(v);
            cells.push(kind.to_string());
            cells.push(reason.clone());
            Some(cells)
        })
        .collect();
    let mut out = format!("small quadric fibrations ({})\n", small.len());
    out += &table(&["a1", "a2", "a3", "a4", "alpha", "d", "partner", "family"], &small);
    out += &format!("\nother tuples ({})\n", others.len());
    out += &table(&["a1", "a2", "a3", "a4", "alpha", "d", "verdict", "reason"], &others);
    out
}

fn candidate_table(e: &Enumeration) -> String {
    let rows: Vec<Vec<String>> = e
        .candidates
        .iter()
        .map(|c| {
            vec![
                c.label.clone(),
                c.dim.to_string(),
                c.degree.to_string(),
                c.picard.to_string(),
                c.h0.map_or_else(|| "-".into(), |h| h.value.to_string()),
                c.partner.clone().unwrap_or_else(|| "-".into()),
                c.construction.to_string(),
            ]
        })
        .collect();
    let excluded: Vec<Vec<String>> = e
        .exclusions
        .iter()
        .map(|x| {
            let values: Vec<String> = x.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            vec![x.label.clone(), values.join(" "), x.reason.clone(), x.citation.clone()]
        })
        .collect();
    let mut out = format!("candidates ({})\n", rows.len());
    out += &table(&["label", "n", "d", "rho", "h0", "partner", "construction"], &rows);
    out += &format!("\nexclusions ({})\n", excluded.len());
    out += &table(&["label", "values", "reason", "citation"], &excluded);
    out
}

fn show_table(r: &FamilyRecord) -> String {
    let with_alias = |id: &str| match catalog::alias_of(id) {
        Some(a) => format!("{id} ({a})"),
        None => id.to_string(),
    };
    let mut lines = vec![
        ("id", r.id.clone()),
        ("dim", r.dim.to_string()),
        ("degree", r.degree.to_string()),
        ("picard", r.picard.to_string()),
        ("index", r.index.to_string()),
        ("contraction", r.contraction.to_string()),
        ("anticanonical_map", r.anticanonical_map.to_string()),
        ("flop_partner", r.flop_partner.as_deref().map_or_else(|| "-".into(), with_alias)),
        ("smoothing", r.smoothing.as_deref().map_or_else(|| "-".into(), with_alias)),
        ("citation", r.citation.clone()),
        ("notes", r.notes.clone()),
    ];
    if let Some(m) = catalog::model(&r.id) {
        lines.push(("model", m.to_string()));
        if let Ok(e) = m.evaluate() {
            lines.push(("model degree", e.degree.to_string()));
            if let Some(h0) = e.h0 {
                lines.push(("model h0(H)", h0.value.to_string()));
            }
        }
    }
    lines
        .into_iter()
        .map(|(k, v)| format!("{k:<18}{v}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("adp").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["enumerate", "--case", "bogus"]).0, EXIT_USAGE);
        let (code, out, err) = run_str(&["verify", "--frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty() && !err.is_empty());
        assert_eq!(run_str(&["show", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["enumerate", "--case", "highdim", "--dim", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn show_uses_alias() {
        let (code, out, _) = run_str(&["show", "thm3.5-1"]);
        assert_eq!(code, 0);
        assert!(out.contains("thm2.1-5 (V_{2,5})"), "{out}");
        assert!(out.contains("c2(F) = 2"));
    }

    #[test]
    fn verify_is_green() {
        let (code, out, _) = run_str(&["verify", "--only", "flops"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn quadric_table_has_six_rows() {
        let (_, out, _) = run_str(&["enumerate", "--case", "quadric"]);
        assert!(out.starts_with("small quadric fibrations (6)\n"));
    }
}
