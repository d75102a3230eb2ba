use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ecarr_cli::format::{read_arrangement, Arrangement};
use ecarr_cli::report::{self, CharpolyMethod, PiOptions, Report, DEFAULT_MAX_COLORINGS};
use ecarr_cli::{CliError, Result};
use ecarr_core::dga::DEFAULT_MAX_ATOMS;
use ecarr_core::homotopy::bicomplex::DEFAULT_MAX_WORDS;
use ecarr_core::IntersectionLattice;

/// Subspace arrangements from edge-colored hypergraphs.
///
/// Exit status: 0 on success, 1 when independent computations disagree or
/// an internal check fails, 2 on bad input, 3 when a budget is exceeded.
#[derive(Debug, Parser)]
#[command(name = "ecarr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Mobius,
    Dc,
    Count,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Intersection lattice, Möbius function and characteristic polynomial.
    Lattice {
        file: PathBuf,
        /// Also write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Characteristic (generalized chromatic) polynomial.
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Budget for brute-force enumeration.
        #[arg(long, default_value_t = DEFAULT_MAX_COLORINGS)]
        max_colorings: u128,
    },
    /// Whether the intersection lattice is geometric.
    Geometric { file: PathBuf },
    /// Cohomology of the relative atomic complex.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_MAX_ATOMS)]
        max_generators: usize,
        /// Check d² = 0, Leibniz, commutativity and associativity first.
        #[arg(long)]
        validate: bool,
    },
    /// Ranks of rational homotopy groups via the word bicomplex.
    Pi {
        file: PathBuf,
        #[arg(long, alias = "max-total-degree")]
        max_degree: Option<i64>,
        #[arg(long)]
        max_page: Option<i64>,
        /// Word weight cap. Defaults to ℓ - 1 when the truncation by total
        /// degree alone is infinite.
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_ATOMS)]
        max_generators: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_WORDS)]
        max_words: usize,
    },
    /// Massey color systems and triple Massey products.
    Massey { file: PathBuf },
    /// No-Massey criterion and top cohomological degree for k-equal arrangements.
    Kequal { l: usize, k: usize },
}

fn load(path: &Path) -> Result<Arrangement> {
    read_arrangement(path)
}

fn missing(name: &str) -> CliError {
    CliError::Input(format!(
        "--{name} is required (or set `{}` in the file)",
        name.replace('-', "_")
    ))
}

fn run(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Lattice { file, dot } => {
            let a = load(&file)?;
            if let Some(path) = dot {
                let text = IntersectionLattice::build(&a.hypergraph).hasse_dot();
                std::fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            Ok(report::lattice(&a.hypergraph))
        }
        Command::Charpoly {
            file,
            method,
            max_colorings,
        } => {
            let a = load(&file)?;
            let method = match method {
                Method::Mobius => CharpolyMethod::Mobius,
                Method::Dc => CharpolyMethod::DeletionContraction,
                Method::Count => CharpolyMethod::Count,
                Method::All => CharpolyMethod::All,
            };
            report::charpoly(&a.hypergraph, method, max_colorings)
        }
        Command::Geometric { file } => Ok(report::geometric(&load(&file)?.hypergraph)),
        Command::Cohomology {
            file,
            max_degree,
            max_generators,
            validate,
        } => {
            let a = load(&file)?;
            let d = max_degree.or(a.max_degree).unwrap_or(i64::MAX);
            report::cohomology(&a.hypergraph, d, max_generators, validate)
        }
        Command::Pi {
            file,
            max_degree,
            max_page,
            max_weight,
            max_generators,
            max_words,
        } => {
            let a = load(&file)?;
            let d = max_degree
                .or(a.max_degree)
                .ok_or_else(|| missing("max-degree"))?;
            let r = max_page.or(a.max_page).ok_or_else(|| missing("max-page"))?;
            let opts = PiOptions {
                max_weight,
                max_generators,
                max_words,
                ..PiOptions::new(d, r)
            };
            report::pi(&a.hypergraph, opts)
        }
        Command::Massey { file } => report::massey(&load(&file)?.hypergraph),
        Command::Kequal { l, k } => report::kequal(l, k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => {
            let text = serde_json::to_string_pretty(&r.json).expect("JSON values serialize");
            // A closed pipe (`ecarr ... | head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(if r.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("ecarr: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
