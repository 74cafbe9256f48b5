use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mil::error::Error;
use mil::groebner::PAIR_BUDGET_ENV;
use mil::{bundled, report, verify, Problem, Report};

#[derive(Parser)]
#[command(name = "mil", version, about = "Invariant rings and their top local cohomology over finite fields")]
struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group order, determinants, pseudoreflections and transvections.
    Classify { file: String },
    /// Invariant dimensions and generators up to a degree.
    Invariants {
        file: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Strand ranks of top local cohomology over a window of degrees.
    Lc {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
    /// The a-invariant of the invariant ring.
    AInvariant {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        floor: Option<i64>,
    },
    /// Property checks on one problem.
    Verify { file: String },
    /// Rerun a bundled example against its expected values.
    Reproduce { id: String },
}

/// A path, or the id of a bundled problem when no such file exists.
fn load(file: &str) -> Result<Problem, Error> {
    if !Path::new(file).exists() && bundled::problem_ids().any(|id| id == file) {
        return bundled::problem(file);
    }
    Problem::from_json(&std::fs::read_to_string(file)?)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::Io(_)
        | Error::UnknownExample(_)
        | Error::InvalidField(_)
        | Error::DimensionMismatch(_)
        | Error::NotAnHsop
        | Error::NotInvariant(_)
        | Error::NotInvertible
        | Error::WrongCount { .. }
        | Error::ArityMismatch { .. }
        | Error::NonHomogeneousInput
        | Error::ContextMismatch => 2,
        Error::TransvectionsPresent | Error::CMNotAsserted | Error::ModularCase => 3,
        Error::PairBudgetExceeded(_)
        | Error::OrderCapExceeded(_)
        | Error::PowerBudgetExceeded(_)
        | Error::SearchFloorReached(_) => 5,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<(Report, u8), Error> {
    if let Ok(v) = std::env::var(PAIR_BUDGET_ENV) {
        if v.trim().parse::<usize>().is_err() {
            return Err(Error::Parse(format!("{PAIR_BUDGET_ENV} must be a nonnegative integer, got `{v}`")));
        }
    }
    let report = match &cli.command {
        Command::Classify { file } => report::classify(&load(file)?),
        Command::Invariants { file, max_degree } => {
            let p = load(file)?;
            let d = max_degree.or(p.spec.windows.max_degree).unwrap_or(3);
            report::invariants(&p, d)?
        }
        Command::Lc { file, from, to } => {
            let p = load(file)?;
            let n = p.n() as i64;
            let (lo, hi) = p.spec.windows.lc.unwrap_or((-n - 2, -n));
            report::lc(&p, from.unwrap_or(lo), to.unwrap_or(hi))?
        }
        Command::AInvariant { file, floor } => report::a_invariant(&load(file)?, *floor)?,
        Command::Verify { file } => verify::verify(&load(file)?)?,
        Command::Reproduce { id } => bundled::reproduce(id)?,
    };
    let code = if !report.all_passed() {
        4
    } else if report.refused() {
        3
    } else {
        0
    };
    Ok((report, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, code)) => {
            print!("{}", report.render());
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("mil: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("mil: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
