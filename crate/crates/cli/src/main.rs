//! `greenforge`: scenario files in, canonical JSON reports out.

mod files;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

pub use run::CliError;

#[derive(Parser)]
#[command(name = "greenforge", version, about = "Derived-equivalence checks for Φ-Green algebras over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible subsets of Z.
    Admissible {
        #[command(subcommand)]
        command: AdmissibleCommand,
    },
    /// Algebra spec files.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Hom dimensions between the complexes of a scenario and their shifts.
    Hom {
        #[arg(long)]
        scenario: PathBuf,
        /// Largest absolute shift.
        #[arg(long, default_value_t = 2)]
        range: i64,
        #[command(flatten)]
        prime: PrimeArg,
    },
    /// Green algebras.
    Green {
        #[command(subcommand)]
        command: GreenCommand,
    },
    /// Full verification pipeline on one or more scenarios.
    Verify(VerifyArgs),
    /// The built-in two-loop example with its quiver presentation.
    Example5 {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 4)]
        orth_bound: i64,
        #[command(flatten)]
        prime: PrimeArg,
    },
}

#[derive(Subcommand)]
enum AdmissibleCommand {
    /// Tests one set, given as a comma-separated list.
    Check {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Lists all admissible subsets of [lo, hi].
    Enum {
        #[arg(long, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, allow_hyphen_values = true)]
        hi: i64,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Dimension, basis, self-injectivity and fingerprint of an algebra file.
    Info {
        #[arg(long)]
        file: PathBuf,
        /// Also print the multiplication table.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        prime: PrimeArg,
    },
}

#[derive(Subcommand)]
enum GreenCommand {
    /// Builds the Green algebra of M ⊕ input and checks its axioms.
    Build {
        #[arg(long)]
        scenario: PathBuf,
        /// Degree set, e.g. 0,1; overrides the scenario file
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        /// F is the d-th power of the shift; overrides the scenario file
        #[arg(long)]
        d: Option<i64>,
        #[command(flatten)]
        prime: PrimeArg,
    },
}

#[derive(Args, Clone, Default)]
pub struct PrimeArg {
    /// Characteristic; overrides the scenario file and GREENFORGE_PRIME.
    #[arg(long)]
    pub prime: Option<u64>,
}

#[derive(Args, Clone)]
pub struct VerifyArgs {
    /// Scenario file; repeat for several scenarios.
    #[arg(long, required = true)]
    pub scenario: Vec<PathBuf>,
    /// Degree set, e.g. 0,1; overrides the scenario files
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
    /// F is the d-th power of the shift; overrides the scenario files
    #[arg(long)]
    pub d: Option<i64>,
    /// Largest |m| for the self-orthogonality check; overrides the scenario files
    #[arg(long)]
    pub orth_bound: Option<i64>,
    #[command(flatten)]
    pub prime: PrimeArg,
    /// Worker processes for independent scenarios.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Single-scenario worker mode: always print a JSON value.
    #[arg(long, hide = true)]
    pub worker: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Admissible { command } => match command {
            AdmissibleCommand::Check { set } => run::admissible_check(&set),
            AdmissibleCommand::Enum { lo, hi } => run::admissible_enum(lo, hi),
        },
        Command::Algebra {
            command: AlgebraCommand::Info { file, table, prime },
        } => run::algebra_info(&file, table, prime.prime),
        Command::Hom { scenario, range, prime } => run::hom(&scenario, range, prime.prime),
        Command::Green {
            command: GreenCommand::Build { scenario, phi, d, prime },
        } => run::green_build(&scenario, phi.as_deref(), d, prime.prime),
        Command::Verify(args) => run::verify(&args),
        Command::Example5 { n, s, orth_bound, prime } => run::example5(n, s, orth_bound, prime.prime),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(h) = e.hint() {
                eprintln!("hint: {h}");
            }
            ExitCode::from(1)
        }
    }
}
