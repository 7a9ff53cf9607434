//! Command-line front end: `qclifford <command> <files…>`.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qclifford::{Error, Tolerance, DEFAULT_SEED};

use commands::Ctx;

#[derive(Parser)]
#[command(name = "qclifford", version, about = "Orbits and Clifford theory for finite quantum groups")]
struct Cli {
    /// Zero threshold for residuals.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_EPS)]
    tol: f64,
    /// Seed for the randomized block splitting.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Also write the report as JSON to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf *-algebra axioms.
    Verify { hopf: String },
    /// Compute the Haar state.
    Haar { hopf: String },
    /// Dual blocks and the multiplicative unitary.
    Dual { hopf: String },
    /// Homogeneous space, orbit relation and central supports.
    Orbits { hopf: String, subgroup: String },
    /// Restriction table and constancy along orbits.
    Clifford { hopf: String, subgroup: String },
    /// The relation σ ~ τ along the fusion and support routes.
    Vergnioux { hopf: String, subgroup: String },
    /// Orbits and Haar values of an action on a finite set.
    ClassicalOrbits { hopf: String, magic: String },
}

fn input_error(e: &Error) -> bool {
    matches!(e, Error::Io(_) | Error::Json(_) | Error::Schema(_) | Error::Shape(_) | Error::ParentMismatch)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match Tolerance::new(cli.tol) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx { tol, seed: cli.seed };
    let result = match &cli.command {
        Command::Verify { hopf } => commands::verify(hopf, &ctx),
        Command::Haar { hopf } => commands::haar(hopf, &ctx),
        Command::Dual { hopf } => commands::dual(hopf, &ctx),
        Command::Orbits { hopf, subgroup } => commands::orbits(hopf, subgroup, &ctx),
        Command::Clifford { hopf, subgroup } => commands::clifford(hopf, subgroup, &ctx),
        Command::Vergnioux { hopf, subgroup } => commands::vergnioux(hopf, subgroup, &ctx),
        Command::ClassicalOrbits { hopf, magic } => commands::classical(hopf, magic, &ctx),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render());
            if let Some(path) = &cli.json {
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if input_error(&e) { 2 } else { 1 })
        }
    }
}
