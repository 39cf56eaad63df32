//! `bicomm`: Groebner and Groebner-Shirshov bases and GK dimension of
//! presentations read from a file.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bicomm_core::Error;

#[derive(Parser, Debug)]
#[command(name = "bicomm", version, about = "GK dimension and normal forms of commutative and bicommutative presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Completion budget in reduction steps.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_steps: usize,
    /// Growth table horizon.
    #[arg(long = "n", global = true, default_value_t = 40)]
    pub n: u64,
    /// Longest monomial listed by `irr`.
    #[arg(long, global = true, default_value_t = 4)]
    pub maxlen: u32,
    /// Print a key-sorted JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check against the brute-force method.
    #[arg(long, global = true)]
    pub oracle: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Completed basis constant, GK dimension and witness.
    Gk { presentation: PathBuf },
    /// Completed (minimal, reduced) basis as a presentation.
    Gsb { presentation: PathBuf },
    /// Normal form of an expression modulo the relations.
    Reduce { presentation: PathBuf, expr: String },
    /// Whether two expressions are equal in the quotient.
    Eq {
        presentation: PathBuf,
        lhs: String,
        rhs: String,
    },
    /// Number of irreducible monomials of each length, with the fitted degree.
    Growth { presentation: PathBuf },
    /// Irreducible monomials up to `--maxlen`.
    Irr { presentation: PathBuf },
}

fn exit_code(e: &Error) -> u8 {
    if e.is_resource() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gk { presentation } => commands::gk(presentation, &cli.flags),
        Command::Gsb { presentation } => commands::gsb(presentation, &cli.flags),
        Command::Reduce { presentation, expr } => commands::reduce(presentation, expr, &cli.flags),
        Command::Eq { presentation, lhs, rhs } => commands::eq(presentation, lhs, rhs, &cli.flags),
        Command::Growth { presentation } => commands::growth(presentation, &cli.flags),
        Command::Irr { presentation } => commands::irr(presentation, &cli.flags),
    };
    match result {
        Ok(out) => {
            if cli.flags.json {
                println!("{}", out.to_json());
            } else {
                print!("{}", out.to_text());
            }
            if out.oracle_failed {
                eprintln!("error: oracle disagreement");
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
