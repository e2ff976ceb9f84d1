//! `lscat`: category and topological-complexity bounds from cohomology,
//! and cover-based motion planners with statistical verification.
//!
//! Exit codes: 0 success or passing verification, 1 failed verification,
//! 2 usage or input error.

/// `println!` that tolerates a closed stdout (e.g. piping into `head`).
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

mod catalog;
mod invariants;
mod plan;
mod ring;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lscat::exact_linalg::Field;

/// Bumped whenever a JSON field is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "lscat",
    version,
    about = "LS-category and topological complexity workbench"
)]
struct Cli {
    /// Print wall-clock time of the command to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bounds for cat, TC and TC^M of a space expression, with certificates.
    Invariants {
        /// e.g. "F(S1 x R^2, 2)", "wedge(RP3, S5)", "pt"
        expr: String,
        /// Coefficient fields, comma separated.
        #[arg(long, env = "LSCAT_FIELDS", default_value = "Q,Z2")]
        fields: String,
        #[arg(long)]
        json: bool,
    },
    /// Basis, Betti numbers, products and cup/zero-divisor cup-lengths of a ring.
    Ring {
        /// A presentation ("exterior(x:1, y:3)", "trunc(a:1, h=4)@Z2", ...) or
        /// a space expression ("S1 x S2", "RP3").
        text: String,
        #[arg(long, env = "LSCAT_FIELDS", default_value = "Q,Z2")]
        fields: String,
        #[arg(long)]
        json: bool,
    },
    /// Plan one motion and print the sampled path as JSON.
    Plan {
        /// circle | sphere:<m> | odd-sphere:<m> | wedge:<m> | cylinder-config:<n>
        space: String,
        /// Start point (see README for the accepted formats).
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Goal point.
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 32)]
        resolution: usize,
    },
    /// Statistically verify a planner; exit 0 iff it passes.
    Verify {
        space: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        time_steps: usize,
    },
    /// List registered rings and planners.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

/// Input errors map to exit code 2.
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn parse_fields(text: &str) -> Result<Vec<Field>, UsageError> {
    let fields: Vec<Field> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Field::parse(s).ok_or_else(|| UsageError(format!("unknown field '{s}'"))))
        .collect::<Result<_, _>>()?;
    if fields.is_empty() {
        return Err(UsageError("no fields given".into()));
    }
    Ok(fields)
}

fn run(cli: Cli) -> Result<bool, UsageError> {
    match cli.command {
        Command::Invariants { expr, fields, json } => {
            invariants::run(&expr, &parse_fields(&fields)?, json)?;
            Ok(true)
        }
        Command::Ring { text, fields, json } => {
            ring::run(&text, &parse_fields(&fields)?, json)?;
            Ok(true)
        }
        Command::Plan {
            space,
            a,
            b,
            resolution,
        } => {
            plan::plan(&space, &a, &b, resolution)?;
            Ok(true)
        }
        Command::Verify {
            space,
            samples,
            seed,
            time_steps,
        } => plan::verify(&space, samples, seed, time_steps),
        Command::Catalog { json } => {
            catalog::run(json)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let timing = cli.timing;
    let start = Instant::now();
    let outcome = run(cli);
    if timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
