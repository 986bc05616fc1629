//! `parmon`: command-line front end for the partition-algebra engine.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use parmon_core::arith::{format_rational, RationalFunction};
use parmon_core::bijections::enumerate_spt;
use parmon_core::bratteli::{enumerate_vt, vertices, Level};
use parmon_core::diagram::enumerate_diagrams_with_limit;
use parmon_core::monoid::{multiplication_table, transition_matrix};
use parmon_core::scalar::Scalar;
use parmon_core::units::{build_system, MatrixUnitSystem};
use parmon_core::verify::{self, CheckOutcome, VerifyConfig};
use parmon_core::young::IntegerPartition;
use parmon_core::DEFAULT_ORDER_LIMIT;

#[derive(Parser)]
#[command(
    name = "parmon",
    about = "Exact computations in partition algebras: diagrams, matrix units, and the monoid basis",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Diagrams,
    Vt,
    Spt,
    /// The Bratteli vertex table, level by level.
    Levels,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Randomized,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Diagram order.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Coefficient mode: exact rational functions in n, or exact rationals
    /// at a random non-degenerate value of n.
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,
    /// Seed for all randomized choices.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Order cap override.
    #[arg(long, default_value_t = DEFAULT_ORDER_LIMIT)]
    limit: usize,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List diagrams, vacillating tableaux, or set-partition tableaux.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = What::Diagrams)]
        what: What,
        /// Final vertex for vacillating tableaux, as a JSON part list such
        /// as `[1]` or `[]`; all vertices when omitted.
        #[arg(long)]
        end: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the matrix-unit system and dump a summary or all units.
    Units {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the verified multiplication table of the monoid basis.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Emit the transition matrix from the monoid basis to the diagram basis.
    Matrix {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the invariant suite for an order and exit nonzero on failure.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Number of random evaluation points in randomized mode.
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
}

fn emit(common: &Common, text: String) -> Result<(), String> {
    match &common.out {
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))
        }
    }
}

fn parse_end(end: &str) -> Result<IntegerPartition, String> {
    let v: Vec<usize> =
        serde_json::from_str(end).map_err(|e| format!("bad --end value {end:?}: {e}"))?;
    IntegerPartition::new(v).map_err(|e| e.to_string())
}

fn cmd_enumerate(
    common: &Common,
    what: What,
    end: Option<&str>,
    format: Format,
) -> Result<(), String> {
    let text = match what {
        What::Diagrams => {
            let ds = enumerate_diagrams_with_limit(common.k, common.limit)
                .map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let items: Vec<_> = ds.iter().map(|d| d.to_json()).collect();
                    format!("{}\n", serde_json::to_string_pretty(&items).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for (i, d) in ds.iter().enumerate() {
                        s.push_str(&format!("{}: {}\n", i + 1, d));
                    }
                    s
                }
            }
        }
        What::Vt => {
            let level = Level::integer(common.k);
            let ends = match end {
                Some(e) => vec![parse_end(e)?],
                None => vertices(level),
            };
            let mut all = Vec::new();
            for mu in ends {
                let paths = enumerate_vt(level, &mu).map_err(|e| e.to_string())?;
                all.extend(paths);
            }
            match format {
                Format::Json => {
                    let items: Vec<_> = all.iter().map(|p| p.to_json()).collect();
                    format!("{}\n", serde_json::to_string_pretty(&items).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for p in &all {
                        s.push_str(&format!("{p}\n"));
                    }
                    s
                }
            }
        }
        What::Levels => {
            let mut rows = Vec::new();
            for twice in 0..=2 * common.k {
                let level = Level::from_twice(twice);
                rows.push((level, vertices(level)));
            }
            match format {
                Format::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|(level, vs)| {
                            serde_json::json!({
                                "level": level.to_string(),
                                "vertices": vs.iter().map(|m| m.parts()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&items).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for (level, vs) in &rows {
                        let names: Vec<String> = vs.iter().map(|m| m.to_string()).collect();
                        s.push_str(&format!("level {level}: {}\n", names.join(" ")));
                    }
                    s
                }
            }
        }
        What::Spt => {
            let all = enumerate_spt(common.k).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let items: Vec<_> = all.iter().map(|t| t.to_json()).collect();
                    format!("{}\n", serde_json::to_string_pretty(&items).unwrap())
                }
                _ => {
                    let mut s = String::new();
                    for t in &all {
                        s.push_str(&format!("{t:?}\n"));
                    }
                    s
                }
            }
        }
    };
    emit(common, text)
}

fn system_summary<S: Scalar>(sys: &MatrixUnitSystem<S>, parameter_note: &str) -> String {
    let mut s = format!(
        "matrix-unit system for order {} ({parameter_note})\n",
        sys.order()
    );
    for (mu, size) in sys.summary() {
        s.push_str(&format!(
            "  vertex {mu}: block size {size} ({} units)\n",
            size * size
        ));
    }
    s.push_str(&format!("total units: {}\n", sys.total_units()));
    s
}

fn units_json<S: Scalar>(sys: &MatrixUnitSystem<S>, parameter_note: &str) -> String {
    let blocks: Vec<_> = sys
        .blocks()
        .iter()
        .map(|b| {
            let units: Vec<_> = b
                .paths
                .iter()
                .enumerate()
                .flat_map(|(i, p)| {
                    let paths = &b.paths;
                    let units = &b.units;
                    paths.iter().enumerate().map(move |(j, q)| {
                        serde_json::json!({
                            "row": p.to_json(),
                            "col": q.to_json(),
                            "element": units[i][j].to_json(),
                        })
                    })
                })
                .collect();
            serde_json::json!({
                "vertex": b.mu.parts(),
                "units": units,
            })
        })
        .collect();
    let v = serde_json::json!({
        "k": sys.order(),
        "parameter": parameter_note,
        "blocks": blocks,
    });
    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
}

/// A system built in the selected mode, with a note describing the parameter.
enum BuiltSystem {
    Symbolic(MatrixUnitSystem<RationalFunction>, String),
    AtPoint(MatrixUnitSystem<parmon_core::arith::Rational>, String),
}

fn build(common: &Common) -> Result<BuiltSystem, String> {
    match common.mode {
        ModeArg::Symbolic => {
            let sys = build_system(common.k, RationalFunction::variable(), common.limit)
                .map_err(|e| e.to_string())?;
            Ok(BuiltSystem::Symbolic(sys, "coefficients in Q(n)".into()))
        }
        ModeArg::Randomized => {
            let (x, sys) =
                verify::random_specialized_system(common.seed, common.k, common.limit)?;
            let note = format!("evaluated at n = {}", format_rational(&x));
            Ok(BuiltSystem::AtPoint(sys, note))
        }
    }
}

fn cmd_units(common: &Common, format: Format) -> Result<(), String> {
    let text = match (build(common)?, format) {
        (BuiltSystem::Symbolic(sys, note), Format::Json) => units_json(&sys, &note),
        (BuiltSystem::AtPoint(sys, note), Format::Json) => units_json(&sys, &note),
        (BuiltSystem::Symbolic(sys, note), _) => system_summary(&sys, &note),
        (BuiltSystem::AtPoint(sys, note), _) => system_summary(&sys, &note),
    };
    emit(common, text)
}

fn table_text<S: Scalar>(
    sys: &MatrixUnitSystem<S>,
    limit: usize,
    format: Format,
) -> Result<String, String> {
    let table = multiplication_table(sys, limit).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<Vec<usize>> = table
                .entries()
                .iter()
                .map(|r| r.iter().map(|e| e + 1).collect())
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::json!({
                    "k": sys.order(),
                    "entries": rows,
                }))
                .unwrap()
            )
        }
        _ => table.to_csv(),
    })
}

fn cmd_table(common: &Common, format: Format) -> Result<(), String> {
    let text = match common.mode {
        ModeArg::Symbolic => match build(common)? {
            BuiltSystem::Symbolic(sys, _) => table_text(&sys, common.limit, format)?,
            BuiltSystem::AtPoint(..) => unreachable!("symbolic mode"),
        },
        // The randomized path verifies every entry through the integer-scaled
        // machinery, which is far faster than generic element products.
        ModeArg::Randomized => {
            let (_, table) =
                verify::verified_table_randomized(common.seed, common.k, common.limit)?;
            match format {
                Format::Json => {
                    let rows: Vec<Vec<usize>> = table
                        .entries()
                        .iter()
                        .map(|r| r.iter().map(|e| e + 1).collect())
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "k": common.k,
                            "entries": rows,
                        }))
                        .unwrap()
                    )
                }
                _ => table.to_csv(),
            }
        }
    };
    emit(common, text)
}

fn matrix_text<S: Scalar>(
    sys: &MatrixUnitSystem<S>,
    limit: usize,
    format: Format,
) -> Result<String, String> {
    let m = transition_matrix(sys, limit).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<Vec<_>> = m
                .rows()
                .iter()
                .map(|r| r.iter().map(|c| c.to_json()).collect())
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::json!({
                    "k": sys.order(),
                    "rows": rows,
                }))
                .unwrap()
            )
        }
        _ => m.to_csv(),
    })
}

fn cmd_matrix(common: &Common, format: Format) -> Result<(), String> {
    let text = match build(common)? {
        BuiltSystem::Symbolic(sys, _) => matrix_text(&sys, common.limit, format)?,
        BuiltSystem::AtPoint(sys, _) => matrix_text(&sys, common.limit, format)?,
    };
    emit(common, text)
}

fn cmd_verify(common: &Common, trials: usize) -> Result<bool, String> {
    let mode = match common.mode {
        ModeArg::Symbolic => verify::Mode::Symbolic,
        ModeArg::Randomized => verify::Mode::Randomized,
    };
    let cfg = VerifyConfig {
        seed: common.seed,
        trials,
    };
    let outcomes: Vec<CheckOutcome> = verify::run_for_order(common.k, mode, cfg);
    let mut text = String::new();
    let mut failures = Vec::new();
    for o in &outcomes {
        text.push_str(&o.line());
        text.push('\n');
        if let Some(f) = &o.failure {
            failures.push(f.clone());
        }
    }
    if !failures.is_empty() {
        text.push_str(&format!(
            "{}\n",
            serde_json::to_string_pretty(&serde_json::json!({ "failures": failures })).unwrap()
        ));
    }
    emit(common, text)?;
    Ok(failures.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate {
            common,
            what,
            end,
            format,
        } => cmd_enumerate(common, *what, end.as_deref(), *format).map(|()| true),
        Command::Units { common, format } => cmd_units(common, *format).map(|()| true),
        Command::Table { common, format } => cmd_table(common, *format).map(|()| true),
        Command::Matrix { common, format } => cmd_matrix(common, *format).map(|()| true),
        Command::Verify { common, trials } => cmd_verify(common, *trials),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
