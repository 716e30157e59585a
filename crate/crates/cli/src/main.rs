//! `a1deg`: exact unstable A¹-degrees from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

mod commands;
mod expr;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use a1deg_core::Field;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{CliError, Outcome};

/// Seed used by randomized suites unless `--seed` is given.
const DEFAULT_SEED: u64 = 0x00A1_DE65;

#[derive(Parser, Debug)]
#[command(name = "a1deg", version, about = "Exact unstable A1-degrees of pointed rational functions over Q and F_p")]
struct Cli {
    /// `Q` or `Fp:<odd prime>`.
    #[arg(long, global = true, default_value = "Q")]
    field: Field,
    /// Emit the result document as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Also write the JSON result document to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timing in the document (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Global unstable degree from the Bézoutian, e.g. "(x^2-1)/x".
    Degree { expr: String },
    /// Local degrees at the rational roots of the numerator.
    Local {
        expr: String,
        /// A single root, or a monic polynomial cutting out a closed point.
        #[arg(long)]
        at: Option<String>,
    },
    /// Sigma matrix and duplicant of a factored polynomial.
    Duplicant {
        /// Roots with multiplicities, "r:e,r:e,...".
        #[arg(long)]
        roots: String,
        /// Leading coefficient.
        #[arg(long, default_value = "1")]
        lc: String,
    },
    /// D-sum of classes at distinct points, or of the local degrees of ∏(x − r)^e / den.
    Dsum {
        /// "point=a,b,~c" places <a>^u + <b>^u - <c>^u at point; repeatable.
        #[arg(long)]
        entry: Vec<String>,
        #[arg(long, conflicts_with = "entry")]
        roots: Option<String>,
        /// Denominator used with --roots (default 1).
        #[arg(long, requires = "roots")]
        den: Option<String>,
    },
    /// Naïve sum of two pointed rational functions.
    Nsum { first: String, second: String },
    /// Check the local-to-global formula on one function or on random instances.
    VerifyLtg {
        expr: Option<String>,
        #[arg(long, conflicts_with = "expr")]
        random: Option<usize>,
    },
    /// Built-in reproduction suites.
    Selftest {
        #[arg(value_enum, default_value_t = Suite::Duplicant)]
        suite: Suite,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    Duplicant,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Degree { .. } => "degree",
        Command::Local { .. } => "local",
        Command::Duplicant { .. } => "duplicant",
        Command::Dsum { .. } => "dsum",
        Command::Nsum { .. } => "nsum",
        Command::VerifyLtg { .. } => "verify-ltg",
        Command::Selftest { .. } => "selftest",
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let field = cli.field;
    match &cli.command {
        Command::Degree { expr } => commands::degree(field, expr),
        Command::Local { expr, at } => commands::local(field, expr, at.as_deref()),
        Command::Duplicant { roots, lc } => commands::duplicant_cmd(field, roots, lc),
        Command::Dsum { entry, roots, den } => commands::dsum(field, entry, roots.as_deref(), den.as_deref()),
        Command::Nsum { first, second } => commands::nsum(field, first, second),
        Command::VerifyLtg { expr, random } => commands::verify_ltg(field, expr.as_deref(), *random, cli.seed),
        Command::Selftest { suite: Suite::Duplicant } => commands::selftest_duplicant(field),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut doc = json!({
        "command": command_name(&cli.command),
        "field": cli.field.to_string(),
        "result": outcome.doc,
        "verified": outcome.verified,
    });
    if cli.timing {
        doc["timing_us"] = json!(start.elapsed().as_micros() as u64);
    }
    let rendered = serde_json::to_string_pretty(&doc).expect("documents serialize");
    let body = if cli.json { format!("{rendered}\n") } else { outcome.text };
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if outcome.verified {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}
