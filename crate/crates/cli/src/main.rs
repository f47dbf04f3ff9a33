use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use padic_eisen_cli::check::Config;
use padic_eisen_cli::{self as cli, CliError, CliResult, EquivMethod, TableFormat};

/// Eisenstein polynomials over Q_p: classification, equivalence and
/// ramification breaks.
#[derive(Parser, Debug)]
#[command(name = "padic-eisen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PrimeArg {
    /// The prime p
    #[arg(short, long)]
    p: u64,
}

#[derive(Args, Debug)]
struct PrecisionArg {
    /// Working precision N of the root-finding oracle (O_L mod p^N)
    #[arg(long, env = "PADIC_PRECISION")]
    precision: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a degree-p polynomial to its canonical representative
    Classify {
        #[command(flatten)]
        prime: PrimeArg,
        /// Polynomial text such as "x^3+6" or a JSON list "[6,0,0,1]"
        poly: String,
    },
    /// Decide whether two polynomials generate isomorphic extensions
    Equiv {
        #[command(flatten)]
        prime: PrimeArg,
        f: String,
        g: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[command(flatten)]
        precision: PrecisionArg,
    },
    /// Lower and upper ramification breaks, any degree
    Breaks {
        #[command(flatten)]
        prime: PrimeArg,
        poly: String,
    },
    /// List all canonical representatives for p
    Table {
        #[command(flatten)]
        prime: PrimeArg,
        /// JSON output
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        /// Tab-separated output (the default)
        #[arg(long)]
        tsv: bool,
    },
    /// Seeded cross-check of the invariants against the oracle
    Check {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Polynomial degree; defaults to p, or 4 for p = 2
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        precision: PrecisionArg,
        /// Use a deliberately broken classifier
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Canonical,
    /// Distance-versus-bound certificate; never reports inequivalence
    #[value(alias = "prop16")]
    Krasner,
    Oracle,
}

impl From<MethodArg> for EquivMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => EquivMethod::Auto,
            MethodArg::Canonical => EquivMethod::Canonical,
            MethodArg::Krasner => EquivMethod::Krasner,
            MethodArg::Oracle => EquivMethod::Oracle,
        }
    }
}

fn dispatch(cmd: Command) -> CliResult<String> {
    match cmd {
        Command::Classify { prime, poly } => cli::classify(cli::prime(prime.p)?, &poly),
        Command::Equiv { prime, f, g, method, precision } => {
            cli::equiv(cli::prime(prime.p)?, &f, &g, method.into(), precision.precision)
        }
        Command::Breaks { prime, poly } => cli::breaks(cli::prime(prime.p)?, &poly),
        Command::Table { prime, json, tsv: _ } => {
            let format = if json { TableFormat::Json } else { TableFormat::Tsv };
            cli::table_listing(cli::prime(prime.p)?, format)
        }
        Command::Check { prime, samples, seed, degree, precision, inject_fault } => {
            let p = cli::prime(prime.p)?;
            let degree = degree.unwrap_or(if p.is_odd() { p.get() as usize } else { 4 });
            if degree < 2 {
                return Err(CliError::Input(format!("degree must be at least 2, got {degree}")));
            }
            cli::run_check(&Config {
                p,
                degree,
                samples,
                seed,
                precision: cli::precision_or_default(p, precision.precision),
                inject_fault,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Violation { report }) => {
            println!("{report}");
            ExitCode::from(cli::EXIT_VIOLATION as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
