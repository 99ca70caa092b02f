use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use esn_cli::bench::{benchmark, write_csv, BenchConfig, BenchError};
use esn_cli::generate::{default_costs, generate_instance, Family};
use esn_cli::instance::{parse_instance, InstanceError};
use esn_cli::report::{run_oracle, run_solver, RunOptions};
use esn_cli::{exit, ENUM_CAP_VAR};
use esn_core::matroid::DEFAULT_ENUMERATION_CAP;
use esn_core::oracle::random::GenerateError;
use esn_core::solvers::{SolveError, Solver};

#[derive(Parser)]
#[command(
    name = "esn",
    version,
    about = "Extreme-supported frontiers of bi-objective matroid basis problems"
)]
struct Cli {
    /// Maximum number of candidate sets enumerated by the global solver and the oracle.
    #[arg(long, global = true, env = ENUM_CAP_VAR, default_value_t = DEFAULT_ENUMERATION_CAP)]
    enum_cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file ("-" reads stdin) and print a JSON report.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "tailored", value_parser = parse_solver)]
        solver: Solver,
        /// Cross-check the result against the brute-force oracle.
        #[arg(long)]
        verify: bool,
        /// Include wall time in the report (breaks byte-for-byte reproducibility).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random instance file.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Graph vertices (graphic) or ground set size (uniform, partition).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run solvers over generated instances and write a CSV table.
    Bench {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated sizes (graph vertices or ground set sizes).
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Inclusive seed range `a..b`.
        #[arg(long, default_value = "1..5", value_parser = parse_range_u64)]
        seeds: RangeInclusive<u64>,
        #[arg(long, value_delimiter = ',', default_value = "tailored,dichotomic", value_parser = parse_solver)]
        solvers: Vec<Solver>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Brute-force classification of every basis image.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Graphic,
    Uniform,
    Partition,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "graphic")]
    family: FamilyKind,
    /// Edge probability for graphic instances.
    #[arg(long, conflicts_with = "degree")]
    p: Option<f64>,
    /// Expected average degree for graphic instances, `p = min(1, d/(n-1))`.
    #[arg(long)]
    degree: Option<f64>,
    /// Rank for uniform and partition instances (default: half the size).
    #[arg(long)]
    rank: Option<usize>,
    /// Number of partition blocks.
    #[arg(long, default_value_t = 3)]
    blocks: usize,
    /// Inclusive integer cost range `lo..hi`.
    #[arg(long, value_parser = parse_range_i64)]
    costs: Option<RangeInclusive<i64>>,
}

impl FamilyArgs {
    fn family(&self, size: usize) -> Family {
        let rank = self.rank.unwrap_or(size / 2);
        match self.family {
            FamilyKind::Graphic => match (self.p, self.degree) {
                (_, Some(d)) => Family::graphic_with_degree(size, d),
                (p, None) => Family::Graphic {
                    n: size,
                    p: p.unwrap_or(0.6),
                },
            },
            FamilyKind::Uniform => Family::Uniform { m: size, rank },
            FamilyKind::Partition => Family::Partition {
                m: size,
                blocks: self.blocks.min(size),
                rank,
            },
        }
    }

    fn costs(&self) -> RangeInclusive<i64> {
        self.costs.clone().unwrap_or_else(default_costs)
    }
}

fn parse_solver(s: &str) -> Result<Solver, String> {
    s.parse().map_err(|e: SolveError| e.to_string())
}

fn parse_range<T: std::str::FromStr>(s: &str) -> Result<RangeInclusive<T>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<T>().map_err(|_| format!("bad bound `{x}` in `{s}`"));
    Ok(parse(a)?..=parse(b.trim_start_matches('='))?)
}

fn parse_range_u64(s: &str) -> Result<RangeInclusive<u64>, String> {
    parse_range(s)
}

fn parse_range_i64(s: &str) -> Result<RangeInclusive<i64>, String> {
    parse_range(s)
}

struct Failure {
    code: i32,
    message: String,
}

impl From<InstanceError> for Failure {
    fn from(e: InstanceError) -> Self {
        Failure {
            code: exit::INVALID_INPUT,
            message: e.to_string(),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = if e.is_resource_limit() {
            exit::RESOURCE_CAP
        } else {
            exit::INVALID_INPUT
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GenerateError> for Failure {
    fn from(e: GenerateError) -> Self {
        Failure {
            code: exit::INVALID_INPUT,
            message: e.to_string(),
        }
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Solve(e) => e.into(),
            other => Failure {
                code: exit::INVALID_INPUT,
                message: other.to_string(),
            },
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: exit::INVALID_INPUT,
        message: format!("cannot write {}: {e}", path.display()),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let cap = cli.enum_cap;
    match cli.command {
        Command::Solve {
            file,
            solver,
            verify,
            timing,
            out,
        } => {
            let (parsed, instance, costs) = parse_instance(&file)?;
            let options = RunOptions {
                verify,
                timing,
                enumeration_cap: cap,
            };
            let report = run_solver(&parsed, &instance, &costs, solver, options)?;
            emit(&report.to_json(), out.as_deref())?;
            if report.has_violations() {
                for v in report.violations.iter().flatten() {
                    eprintln!("violation: {v}");
                }
                return Ok(exit::VIOLATION);
            }
            Ok(exit::OK)
        }
        Command::Gen { family, n, seed, out } => {
            let file = generate_instance(seed, &family.family(n), &family.costs())?;
            emit(&file.to_json(), out.as_deref())?;
            Ok(exit::OK)
        }
        Command::Bench {
            family,
            sizes,
            seeds,
            solvers,
            csv,
        } => {
            let config = BenchConfig {
                families: sizes.iter().map(|&s| family.family(s)).collect(),
                seeds,
                solvers,
                costs: family.costs(),
                enumeration_cap: cap,
            };
            let rows = benchmark(&config)?;
            match csv {
                Some(path) => {
                    let f = fs::File::create(&path).map_err(|e| io_failure(&path, e))?;
                    write_csv(&rows, f)?;
                }
                None => write_csv(&rows, std::io::stdout().lock())?,
            }
            Ok(exit::OK)
        }
        Command::Oracle { file, out } => {
            let (parsed, instance, costs) = parse_instance(&file)?;
            let report = run_oracle(&parsed, &instance, &costs, cap)?;
            emit(&report.to_json(), out.as_deref())?;
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code as u8)
}
