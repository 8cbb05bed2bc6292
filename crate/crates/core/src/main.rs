use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use locc_lab::catalysis::CatalystSearchConfig;
use locc_lab::cli::{self, CliError, InputOptions, LoadedState};
use locc_lab::multicopy::{pmax_scan, DEFAULT_K_MAX};
use locc_lab::statefile::Mode;

/// Exact LOCC transformation analysis for bipartite pure states.
///
/// STATE arguments are file paths (one coefficient per line, or a JSON
/// list) or built-in fixture names; run `locc-lab fixtures` for the list.
#[derive(Debug, Parser)]
#[command(name = "locc-lab", version)]
struct Cli {
    #[command(flatten)]
    input: InputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Treat file coefficients as amplitudes and square them.
    #[arg(long, global = true)]
    amplitudes: bool,

    /// Rescale file coefficients by their exact sum.
    #[arg(long, global = true)]
    normalize: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Single-copy comparability and optimal conclusive probabilities.
    Compare { a: String, b: String },

    /// Classify an incomparable pair by its multi-copy behaviour.
    Classify {
        a: String,
        b: String,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: u32,
    },

    /// p_max(A^k → B^k) for k = 1..=k-max.
    Scan {
        a: String,
        b: String,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: u32,
        /// Write CSV here (`-` for stdout instead of the table).
        #[arg(long)]
        csv: Option<PathBuf>,
    },

    /// Check a catalyst or search for one on a rational grid.
    Catalyst {
        a: String,
        b: String,
        /// Catalyst state to verify.
        #[arg(long, conflicts_with = "find", required_unless_present = "find")]
        check: Option<String>,
        /// Search the grid for a catalyst.
        #[arg(long)]
        find: bool,
        /// Catalyst ranks to try, e.g. 2..4.
        #[arg(long, default_value = "2..4")]
        dims: String,
        /// Grid resolution: coefficients are multiples of 1/Q.
        #[arg(long, default_value_t = 20)]
        grid_q: u32,
        /// Number of copies of the pair.
        #[arg(long, default_value_t = 1)]
        copies: u32,
    },

    /// Entropy of entanglement in bits.
    Entropy { a: String },

    /// List the built-in fixture states.
    Fixtures,
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: Cli) -> Result<(), CliError> {
    let opts = InputOptions {
        mode: if args.input.amplitudes {
            Mode::Amplitudes
        } else {
            Mode::Probabilities
        },
        normalize: args.input.normalize,
    };
    let load = |s: &str| -> Result<LoadedState, CliError> { cli::load_state(s, opts) };
    let limits = cli::limits_from_env()?;
    let positive = |k: u32, flag: &str| {
        if k == 0 {
            Err(CliError::Input(format!("{flag} must be at least 1")))
        } else {
            Ok(k)
        }
    };

    match args.command {
        Command::Compare { a, b } => {
            print!("{}", cli::compare_report(&load(&a)?, &load(&b)?));
        }
        Command::Classify { a, b, k_max } => {
            let k_max = positive(k_max, "--k-max")?;
            print!(
                "{}",
                cli::classify_report(&load(&a)?, &load(&b)?, k_max, limits)?
            );
        }
        Command::Scan { a, b, k_max, csv } => {
            let k_max = positive(k_max, "--k-max")?;
            let (a, b) = (load(&a)?, load(&b)?);
            let scan = pmax_scan(&a.spectrum, &b.spectrum, k_max, limits)?;
            match csv {
                Some(path) if path.as_os_str() == "-" => {
                    cli::write_output(&path, &cli::scan_csv(&scan))?
                }
                Some(path) => {
                    cli::write_output(&path, &cli::scan_csv(&scan))?;
                    print!("{}", cli::scan_table(&scan));
                }
                None => print!("{}", cli::scan_table(&scan)),
            }
        }
        Command::Catalyst {
            a,
            b,
            check,
            find,
            dims,
            grid_q,
            copies,
        } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let report = if let Some(c) = check {
                cli::catalyst_check_report(&a, &b, &load(&c)?, copies, limits)?
            } else {
                debug_assert!(find);
                let dims = cli::parse_dims(&dims).map_err(CliError::Input)?;
                let cfg = CatalystSearchConfig::new(dims, grid_q, copies)?;
                cli::catalyst_find_report(&a, &b, &cfg, limits)?
            };
            print!("{report}");
        }
        Command::Entropy { a } => print!("{}", cli::entropy_report(&load(&a)?)),
        Command::Fixtures => print!("{}", cli::fixtures_report()),
    }
    Ok(())
}
