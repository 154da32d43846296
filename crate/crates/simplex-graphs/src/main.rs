//! Thin command-line front end over the library: enumerate universes, run
//! verification suites, and export the line graph.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use simplex_graphs::appendix::AppendixTable;
use simplex_graphs::field::FieldTable;
use simplex_graphs::graph::{stratify, SimplexGraph};
use simplex_graphs::simplex::SimplexUniverse;
use simplex_graphs::verify::{run_suite, Suite};
use simplex_graphs::{export, LineId};

/// Environment variable naming a directory that holds `q4_tables.txt`.
const DATA_DIR_ENV: &str = "SIMPLEX_GRAPHS_DATA";

#[derive(Parser)]
#[command(name = "simplex-graphs", version, about = "enumerate and verify 2-dimensional q-ary simplex codes", disable_help_subcommand = true)]
struct Cli {
    /// Worker threads for enumeration sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Graphml,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the simplex points and lines of GF(q)^(q+1).
    Enumerate {
        /// Field order (3, 4, or 5).
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = DumpFormat::Text)]
        format: DumpFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites and report pass/fail per check.
    Verify {
        /// Field order; the named suites require q = 4.
        #[arg(long, default_value_t = 4)]
        q: u64,
        /// foundations | theorem1 | theorem2 | appendix | smallq | all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Reference tables file (default: $SIMPLEX_GRAPHS_DATA/q4_tables.txt,
        /// falling back to the embedded copy).
        #[arg(long)]
        data: Option<PathBuf>,
        /// Include per-check runtimes (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Export the line graph.
    Export {
        /// Field order (3 or 4).
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Base line id for stratification coloring.
        #[arg(long)]
        base: Option<LineId>,
        /// Color vertices by their stratification class (requires --base).
        #[arg(long, requires = "base")]
        color_strata: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // A failed build means a pool already exists; that is fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> simplex_graphs::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cmd: Cmd) -> simplex_graphs::Result<ExitCode> {
    match cmd {
        Cmd::Enumerate { q, format, output } => {
            let u = SimplexUniverse::for_order(q)?;
            let text = match format {
                DumpFormat::Json => format!("{:#}\n", u.dump_json()),
                DumpFormat::Text => {
                    let mut s = format!(
                        "q={} n={}: {} simplex points, {} simplex lines\n",
                        u.q(),
                        u.n(),
                        u.simplex_point_count(),
                        u.line_count()
                    );
                    for id in 0..u.line_count() as LineId {
                        s.push_str(&format!("{id:>5}  {}\n", u.line_text(id)?));
                    }
                    s
                }
            };
            emit(output.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            q,
            suite,
            format,
            output,
            data,
            timings,
        } => {
            let suite: Suite = suite.parse()?;
            if q != 4 && suite != Suite::SmallQ {
                return Err(simplex_graphs::Error::UnsupportedOrder(q));
            }
            let table = load_tables(data.as_ref())?;
            let report = run_suite(suite, table)?;
            let text = match format {
                ReportFormat::Json => format!("{:#}\n", report.to_json(timings)),
                ReportFormat::Text => report.to_text(timings),
            };
            emit(output.as_ref(), &text)?;
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::Export {
            q,
            format,
            base,
            color_strata,
            output,
        } => {
            if q != 3 && q != 4 {
                return Err(simplex_graphs::Error::UnsupportedOrder(q));
            }
            let u = SimplexUniverse::for_order(q)?;
            let g = SimplexGraph::build(&u);
            let strat = match (base, color_strata) {
                (Some(b), true) => Some(stratify(&g, b)?),
                (Some(b), false) => {
                    // validate the id even when not coloring
                    u.line(b)?;
                    None
                }
                _ => None,
            };
            let text = match format {
                GraphFormat::Dot => export::to_dot(&g, strat.as_ref()),
                GraphFormat::Graphml => export::to_graphml(&g, strat.as_ref()),
                GraphFormat::Json => format!("{:#}\n", export::adjacency_json(&g, strat.as_ref())),
            };
            emit(output.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Table resolution: explicit --data path, then $SIMPLEX_GRAPHS_DATA, then
/// the embedded copy (None lets the verifier use it).
fn load_tables(data: Option<&PathBuf>) -> simplex_graphs::Result<Option<AppendixTable>> {
    let field = FieldTable::new(2, 2)?;
    if let Some(path) = data {
        if !path.exists() {
            return Err(simplex_graphs::Error::Parse {
                line: 0,
                msg: format!("tables file not found: {}", path.display()),
            });
        }
        return AppendixTable::load(path, &field).map(Some);
    }
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let path = PathBuf::from(dir).join("q4_tables.txt");
        if !path.exists() {
            return Err(simplex_graphs::Error::Parse {
                line: 0,
                msg: format!("tables file not found: {}", path.display()),
            });
        }
        return AppendixTable::load(&path, &field).map(Some);
    }
    Ok(None)
}
