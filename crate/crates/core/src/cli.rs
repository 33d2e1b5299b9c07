//! Command-line front-end. Exit status 0 on success, 1 when a verification
//! check fails, 2 for usage and parse errors, 3 when a group exceeds the
//! size cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{self, SearchFamilies};
use crate::catalog::{Catalog, MAX_CLASS_ORDER};
use crate::census::psi_ratios;
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::recipe::{realize, GroupRecipe};
use crate::report::{exact_and_decimal, render_table, Status};
use crate::suite::{run_suite, Suite};

#[derive(Parser, Debug)]
#[command(name = "avgorder", version, about = "Exact element-order statistics of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned text, rationals as num/den with a 12-digit decimal.
    Table,
    /// One JSON object per line, rationals as "num/den".
    Records,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order census, psi, average order and classification flags of a recipe.
    Compute {
        recipe: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Minimum average order for each group order up to MAX_N.
    Table {
        #[arg(long, default_value_t = MAX_CLASS_ORDER)]
        max_n: u64,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Write the records here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Records)]
        format: Format,
    },
    /// Family-restricted search for integer average orders.
    Search {
        #[arg(long, default_value_t = 5000)]
        max_order: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [FamilyArg::Abelian, FamilyArg::Frobenius])]
        families: Vec<FamilyArg>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Average orders of the prime-power products converging to N.
    Limit {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 40)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Groups with average order in [13/6, 9/4 - EPSILON).
    Density {
        /// Exact rational in (0, 1/12), e.g. 1/24.
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Abelian,
    Frobenius,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_catalog(path: Option<PathBuf>) -> Result<Catalog> {
    match path {
        Some(p) => Catalog::load(p),
        None => Ok(Catalog::embedded()),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::out_of_range("output", e.to_string()))
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute { recipe, format } => {
            let recipe: GroupRecipe = recipe.parse()?;
            let g = realize(&recipe)?;
            let report = psi_ratios(&g)?;
            let text = match format {
                Format::Records => json_line(json!({ "recipe": recipe.to_string(), "report": report })),
                Format::Table => {
                    let flags = &report.flags;
                    let fired: Vec<&str> = report.verdicts.iter().filter(|v| v.fired).map(|v| v.id.as_str()).collect();
                    let rows = vec![
                        vec!["group".into(), recipe.to_string()],
                        vec!["order".into(), report.group_order.to_string()],
                        vec!["psi".into(), report.psi.to_string()],
                        vec!["o".into(), exact_and_decimal(&report.avg_order)],
                        vec!["psi'".into(), exact_and_decimal(&report.psi_prime)],
                        vec!["psi''".into(), exact_and_decimal(&report.psi_double_prime)],
                        vec!["census".into(), report.census.to_string()],
                        vec!["abelian".into(), flags.abelian.to_string()],
                        vec!["cyclic".into(), flags.cyclic.to_string()],
                        vec!["nilpotent".into(), flags.nilpotent.to_string()],
                        vec!["solvable".into(), flags.solvable.to_string()],
                        vec!["elementary abelian 2".into(), flags.elementary_abelian_2.to_string()],
                        vec!["criteria fired".into(), if fired.is_empty() { "-".into() } else { fired.join(", ") }],
                    ];
                    render_table(&["field", "value"], &rows)
                }
            };
            emit(stdout, &text)?;
            Ok(0)
        }
        Command::Table { max_n, catalog, format } => {
            let catalog = load_catalog(catalog)?;
            let table = analysis::min_average_table(&catalog, max_n)?;
            let text = match format {
                Format::Records => table
                    .iter()
                    .map(|(n, v, ids)| json_line(json!({ "n": n, "min_average_order": v, "attained_by": ids })))
                    .collect(),
                Format::Table => {
                    let rows: Vec<Vec<String>> = table
                        .iter()
                        .map(|(n, v, ids)| vec![n.to_string(), v.to_string(), v.to_decimal(), ids.join(" ")])
                        .collect();
                    render_table(&["n", "a_n", "decimal", "attained by"], &rows)
                }
            };
            emit(stdout, &text)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            catalog,
            out,
            format,
        } => {
            let suite: Suite = suite.parse()?;
            let catalog = load_catalog(catalog)?;
            let report = run_suite(suite, &catalog);
            let text = match format {
                Format::Records => report.to_json_lines(),
                Format::Table => {
                    let rows: Vec<Vec<String>> = report
                        .records
                        .iter()
                        .map(|r| vec![format!("{:?}", r.status).to_lowercase(), r.id.clone(), r.claim.clone()])
                        .collect();
                    render_table(&["status", "id", "claim"], &rows)
                }
            };
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::out_of_range("output", format!("{}: {e}", path.display())))?,
                None => emit(stdout, &text)?,
            }
            let summary = format!(
                "{} checks: {} passed, {} vacuous, {} failed\n",
                report.records.len(),
                report.count(Status::Pass),
                report.count(Status::Vacuous),
                report.count(Status::Fail)
            );
            emit(stderr, &summary)?;
            for r in report.failures() {
                emit(stderr, &format!("FAILED {}: {}\n", r.id, r.witness))?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Search {
            max_order,
            families,
            format,
        } => {
            let families = SearchFamilies {
                abelian: families.contains(&FamilyArg::Abelian),
                frobenius_products: families.contains(&FamilyArg::Frobenius),
            };
            let search = analysis::integer_search(max_order, families)?;
            let text = match format {
                Format::Records => search.hits.iter().map(|h| json_line(json!(h))).collect(),
                Format::Table => {
                    let rows: Vec<Vec<String>> = search
                        .hits
                        .iter()
                        .map(|h| vec![h.order.to_string(), h.avg_order.to_string(), h.psi.to_string(), h.recipe.to_string()])
                        .collect();
                    format!("scope: {}\n{}", search.scope, render_table(&["order", "o", "psi", "group"], &rows))
                }
            };
            emit(stdout, &text)?;
            Ok(0)
        }
        Command::Limit { n, m_max, format } => {
            let trace = analysis::limit_sequence(n, m_max)?;
            let text = match format {
                Format::Records => trace
                    .terms
                    .iter()
                    .map(|t| json_line(json!({ "n": n, "m": t.m, "avg_order": t.avg_order, "gap": t.gap })))
                    .collect(),
                Format::Table => {
                    let rows: Vec<Vec<String>> = trace
                        .terms
                        .iter()
                        .map(|t| vec![t.m.to_string(), t.avg_order.to_decimal(), t.gap.to_decimal()])
                        .collect();
                    render_table(&["m", "o(G_m)", "|o(G_m) - n|"], &rows)
                }
            };
            emit(stdout, &text)?;
            Ok(0)
        }
        Command::Density {
            epsilon,
            catalog,
            format,
        } => {
            let epsilon: ExactRational = epsilon.parse()?;
            let catalog = load_catalog(catalog)?;
            let subjects = analysis::small_value_subjects(&catalog, 20, 97)?;
            let scan = analysis::density_scan(&subjects, &epsilon)?;
            let text = match format {
                Format::Records => json_line(json!(scan)),
                Format::Table => {
                    let rows: Vec<Vec<String>> = scan
                        .occupants
                        .iter()
                        .map(|s| vec![s.label.clone(), s.order.to_string(), exact_and_decimal(&s.avg_order)])
                        .collect();
                    format!(
                        "interval [13/6, {}), n0 = {}, all occupants below n0: {}\nnote: {}\n{}",
                        scan.upper,
                        scan.n0,
                        scan.all_below_n0,
                        scan.note,
                        render_table(&["group", "order", "o"], &rows)
                    )
                }
            };
            emit(stdout, &text)?;
            Ok(0)
        }
    }
}
