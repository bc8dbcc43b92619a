use std::process::ExitCode;

use clap::{Parser, Subcommand};

use braidinv::invariants::invariant_report_with_limit;
use braidinv::sieve::sieve;
use braidinv::verify::{self, VerifyConfig};
use braidinv::{BraidError, BraidWord, DEFAULT_MAX_ORDER};

/// Crossing-matrix invariants of braid words.
///
/// Words are signed generator indices separated by spaces or commas:
/// "-2 1 2" is σ₂⁻¹ σ₁ σ₂.
#[derive(Parser, Debug)]
#[command(name = "braidinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the invariant report of one word.
    Invariants {
        /// Strand count; defaults to one more than the largest generator.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
        /// Refuse words whose permutation order exceeds this.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: u64,
    },
    /// Group every word up to a length by conjugacy key.
    Sieve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the seeded property suites.
    Verify {
        /// Largest strand count drawn (at least 2).
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ORDER_GUARD: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                BraidError::OrderLimitExceeded { .. } => EXIT_ORDER_GUARD,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(command: Command) -> Result<ExitCode, BraidError> {
    match command {
        Command::Invariants {
            n,
            word,
            json,
            max_order,
        } => {
            let word = BraidWord::parse(&word, n)?;
            let report = invariant_report_with_limit(&word, max_order)?;
            if json {
                println!("{}", report.to_json_pretty());
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sieve { n, max_len, json } => {
            let result = sieve(n, max_len, DEFAULT_MAX_ORDER, true)?;
            if json {
                println!("{}", result.to_json());
            } else {
                print!("{}", result.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n,
            trials,
            seed,
            max_len,
        } => {
            if n < 2 {
                eprintln!("error: --n must be at least 2");
                return Ok(ExitCode::from(EXIT_USAGE));
            }
            let report = verify::run(&VerifyConfig {
                max_strands: n,
                trials,
                seed,
                max_len,
            });
            print!("{}", report.render_text());
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            })
        }
    }
}
