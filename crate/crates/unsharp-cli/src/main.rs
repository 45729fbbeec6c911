//! Command-line front end: axiom checking, table and order printing,
//! expression evaluation over time frames, relation induction, frame
//! extension, and the full law suite.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check
//! fails, 2 on input errors (unreadable files, syntax, unknown ids,
//! invalid algebras where a valid one is required).

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use unsharp_core::expr::{self, Context};
use unsharp_core::format;
use unsharp_core::induction::{self, OperatorTable};
use unsharp_core::laws::{self, Check, LawConfig, Report, Status};
use unsharp_core::render::{self, TableOp};
use unsharp_core::tense::Proposition;
use unsharp_core::{EffectAlgebra, TimeFrame};

#[derive(Parser)]
#[command(
    name = "unsharp",
    version,
    about = "Finite effect algebras with unsharp connectives and tense operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for the sampled law tiers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for the exhaustive sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Report style for check output.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report_format: ReportFormat,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    /// One human-readable line per check.
    Text,
    /// One JSON object per check.
    Lines,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra file.
    Verify { algebra: PathBuf },
    /// Print the operation table of a connective.
    Table {
        algebra: PathBuf,
        /// One of plus, odot, imp-arrow, imp-squig, imp-double, otimes.
        #[arg(long)]
        op: String,
    },
    /// Print the cover relation of the induced order.
    Order { algebra: PathBuf },
    /// Evaluate expressions over a frame, one table row per --expr.
    Tense {
        algebra: PathBuf,
        frame: PathBuf,
        props: PathBuf,
        /// Expression to evaluate (repeatable), e.g. "G(phi(p=>q))".
        #[arg(long = "expr", required = true)]
        exprs: Vec<String>,
    },
    /// Compute the relation induced by tense operators (from a frame
    /// file or an operator file) as a sorted pair list.
    Induce { algebra: PathBuf, source: PathBuf },
    /// Build the extended frame over the induced relation and check the
    /// restriction theorem; the report rides along as comments.
    Extend { algebra: PathBuf, source: PathBuf },
    /// Run the law suite (algebra tier always; tense and induction
    /// tiers when a frame and propositions are given).
    Laws {
        algebra: PathBuf,
        frame: Option<PathBuf>,
        props: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe goes away (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure the worker pool");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_algebra(path: &Path) -> Result<EffectAlgebra, String> {
    format::load_algebra(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_frame(path: &Path) -> Result<TimeFrame, String> {
    format::parse_frame(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// A frame file induces the operators; an operator file is taken as is.
fn load_operator_table(ea: &EffectAlgebra, path: &Path) -> Result<OperatorTable, String> {
    let text = read(path)?;
    if format::looks_like_ops(&text) {
        format::parse_ops(&text, ea).map_err(|e| format!("{}: {e}", path.display()))
    } else {
        let frame = format::parse_frame(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        OperatorTable::induced(frame).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn config(cli: &Cli) -> LawConfig {
    LawConfig {
        seed: cli.seed,
        ..LawConfig::default()
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Verify { algebra } => {
            let raw = format::parse_algebra(&read(algebra)?)
                .map_err(|e| format!("{}: {e}", algebra.display()))?;
            match raw.validate() {
                Ok(ea) => {
                    let kind = if ea.is_lattice() {
                        "lattice"
                    } else {
                        "not a lattice"
                    };
                    println!("valid effect algebra; {kind}");
                    Ok(true)
                }
                Err(violation) => {
                    println!("invalid effect algebra: {violation}");
                    Ok(false)
                }
            }
        }
        Command::Table { algebra, op } => {
            let ea = load_algebra(algebra)?;
            let op = TableOp::from_cli_name(op).ok_or_else(|| {
                format!(
                    "unknown operation `{op}`; use plus, odot, imp-arrow, imp-squig, \
                     imp-double or otimes"
                )
            })?;
            print!("{}", render::operation_table(&ea, op));
            Ok(true)
        }
        Command::Order { algebra } => {
            let ea = load_algebra(algebra)?;
            print!("{}", render::cover_list(&ea));
            Ok(true)
        }
        Command::Tense {
            algebra,
            frame,
            props,
            exprs,
        } => {
            let ea = load_algebra(algebra)?;
            let frame = load_frame(frame)?;
            let props = format::parse_props(&read(props)?, &ea, frame.times())
                .map_err(|e| format!("{}: {e}", props.display()))?;
            let ctx = Context {
                ea: &ea,
                frame: &frame,
                props: &props,
            };
            let mut rows = Vec::new();
            for text in exprs {
                let value = expr::eval(&ctx, text).map_err(|e| format!("{text}: {e}"))?;
                let cells = value.cells(&ea).map_err(|e| format!("{text}: {e}"))?;
                rows.push((text.clone(), cells));
            }
            let columns: Vec<String> = frame.times().to_vec();
            print!("{}", render::grid("t", &columns, &rows));
            Ok(true)
        }
        Command::Induce { algebra, source } => {
            let ea = load_algebra(algebra)?;
            let table = load_operator_table(&ea, source)?;
            let cfg = config(cli);
            let rel = induction::induce_relation(&ea, &table, &cfg);
            if rel.sampled {
                println!(
                    "# quantified over {} sampled propositions (seed {})",
                    rel.quantified, cli.seed
                );
            }
            for (s, t) in rel.pairs() {
                println!("{} {}", table.times()[s], table.times()[t]);
            }
            Ok(true)
        }
        Command::Extend { algebra, source } => {
            let ea = load_algebra(algebra)?;
            let table = load_operator_table(&ea, source)?;
            let cfg = config(cli);
            let rel = induction::induce_relation(&ea, &table, &cfg);
            let ext = induction::extend_frame(&table, &rel);
            print!("{}", format::serialize_extended_frame(&ext));
            let checks = induction::check_extension(&ea, &table, &cfg);
            let mut report = Report::default();
            report.extend(checks);
            for line in render_report(&report, cli.report_format) {
                println!("# {line}");
            }
            Ok(report.all_passed())
        }
        Command::Laws {
            algebra,
            frame,
            props,
        } => {
            let ea = load_algebra(algebra)?;
            let tense_inputs: Option<(TimeFrame, Vec<(String, Proposition)>)> = match (frame, props)
            {
                (None, None) => None,
                (Some(f), Some(p)) => {
                    let frame = load_frame(f)?;
                    let props = format::parse_props(&read(p)?, &ea, frame.times())
                        .map_err(|e| format!("{}: {e}", p.display()))?;
                    Some((frame, props))
                }
                _ => return Err("laws needs both a frame and a propositions file".into()),
            };
            let cfg = config(cli);
            let report = match &tense_inputs {
                None => laws::run_algebra_suite(&ea, &cfg),
                Some((frame, props)) => {
                    let bare: Vec<Proposition> = props.iter().map(|(_, p)| p.clone()).collect();
                    laws::run_full_suite(&ea, Some((frame, &bare)), &cfg)
                        .map_err(|e| e.to_string())?
                }
            };
            for line in render_report(&report, cli.report_format) {
                println!("{line}");
            }
            if cli.report_format == ReportFormat::Text {
                println!(
                    "passed {}, failed {}, skipped {}",
                    report.passed(),
                    report.failed(),
                    report.skipped()
                );
            }
            Ok(report.all_passed())
        }
    }
}

fn render_report(report: &Report, format: ReportFormat) -> Vec<String> {
    report
        .checks
        .iter()
        .map(|c| render_check(c, format))
        .collect()
}

fn render_check(check: &Check, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => match &check.status {
            Status::Pass {
                cases,
                sampled,
                note,
            } => {
                let mut line = format!("PASS {} ({cases} cases", check.id);
                if *sampled {
                    line.push_str(", sampled");
                }
                line.push(')');
                if let Some(note) = note {
                    line.push_str(&format!(" [{note}]"));
                }
                line
            }
            Status::Fail { cases, witness } => {
                format!("FAIL {} ({cases} cases): {witness}", check.id)
            }
            Status::Skip { reason } => format!("SKIP {}: {reason}", check.id),
        },
        ReportFormat::Lines => {
            let value = match &check.status {
                Status::Pass {
                    cases,
                    sampled,
                    note,
                } => serde_json::json!({
                    "check": check.id,
                    "status": "pass",
                    "cases": cases,
                    "sampled": sampled,
                    "note": note,
                }),
                Status::Fail { cases, witness } => serde_json::json!({
                    "check": check.id,
                    "status": "fail",
                    "cases": cases,
                    "witness": witness,
                }),
                Status::Skip { reason } => serde_json::json!({
                    "check": check.id,
                    "status": "skip",
                    "reason": reason,
                }),
            };
            value.to_string()
        }
    }
}
