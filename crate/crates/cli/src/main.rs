//! Driver for penalty-protected encoding experiments.
//!
//! One experiment per invocation, described by a JSON config; artifacts land
//! in the output directory and are byte-identical across reruns of the same
//! config (search certificates excepted: they carry a wall-clock field).

use clap::{Parser, Subcommand};
use stabgap_cli::commands::{self, Ctx};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "stabgap",
    version,
    about = "Stabilizer-encoded Hamiltonian experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Experiment description (JSON)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Directory artifacts are written into
    #[arg(long, global = true, value_name = "DIR", default_value = ".")]
    out: PathBuf,

    /// Worker threads for internal sweeps (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Refuse dense-matrix work above this many qubits
    #[arg(long, global = true, value_name = "N")]
    matrix_limit: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a code's structure and error detection, printing the report
    VerifyCode {
        /// "four_qubit", "five_qubit", inline JSON, or a path to a code file
        selector: String,
    },
    /// Encode the configured Hamiltonian and save the physical operator
    Encode,
    /// Exact eigenvalues, with codespace flags when a code is configured
    Spectrum,
    /// Spectral-gap profile along the interpolation path
    GapPath,
    /// Integrate the closed sweep
    Evolve,
    /// Integrate the sweep coupled to the configured thermal bath
    MasterEq,
    /// Run an exhaustive enumeration claim and write its certificate
    Search {
        /// "no-3qubit-code" or "detecting-code"
        claim: String,
        /// Register size for the detecting-code claim
        #[arg(long)]
        qubits: Option<usize>,
        /// Generator count for the detecting-code claim (default: qubits − 1)
        #[arg(long)]
        generators: Option<usize>,
    },
    /// Evaluate n − k ≥ 2(d − 1)
    Singleton { n: usize, k: usize, d: u32 },
}

fn main() {
    // One BLAS thread keeps every reduction order fixed; parallelism comes
    // from the sweep level instead.
    std::env::set_var("OPENBLAS_NUM_THREADS", "1");
    let cli = Cli::parse();

    if let Some(jobs) = cli.jobs {
        // Errors only if a global pool already exists, which cannot happen
        // this early; ignore rather than crash on a harmless double-init.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }

    let ctx = Ctx {
        config_path: cli.config.as_deref(),
        out: &cli.out,
        matrix_limit: cli.matrix_limit,
    };
    let outcome = match &cli.command {
        Command::VerifyCode { selector } => commands::verify_code(selector),
        Command::Encode => commands::encode_cmd(&ctx),
        Command::Spectrum => commands::spectrum(&ctx),
        Command::GapPath => commands::gap_path(&ctx),
        Command::Evolve => commands::evolve(&ctx),
        Command::MasterEq => commands::master_eq(&ctx),
        Command::Search {
            claim,
            qubits,
            generators,
        } => commands::search(&ctx, claim, *qubits, *generators),
        Command::Singleton { n, k, d } => commands::singleton(*n, *k, *d),
    };

    if let Err(failure) = outcome {
        eprintln!("error: {}", failure.message());
        std::process::exit(failure.exit_code());
    }
}
