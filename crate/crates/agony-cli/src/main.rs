use std::path::PathBuf;
use std::process::ExitCode;

use agony_cli::run::{cmd_bench, cmd_compute, cmd_verify, Algorithm, RunConfig};
use clap::{Parser, Subcommand};

fn parse_ratio(s: &str) -> Result<agony_core::Ratio, String> {
    agony_core::Ratio::parse(s)
        .ok_or_else(|| format!("'{s}' is not a non-negative rational (try 0, 1/2, or 0.25)"))
}

#[derive(Parser)]
#[command(
    name = "agony",
    version,
    about = "Hierarchy discovery in directed graphs by exact agony minimization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one edge-list file and emit ranks (TSV, smaller rank = higher
    /// level).
    Compute {
        /// Edge-list file: one "src dst" pair per line, '#' comments.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "relief")]
        algorithm: Algorithm,
        /// Stop once agony <= (1 + EPSILON) * |E(H)|; accepts "1/2",
        /// "0.25", "2". 0 means exact.
        #[arg(long, value_parser = parse_ratio, default_value = "0")]
        epsilon: agony_core::Ratio,
        /// Drain every queued raise instead of stopping at the relieved
        /// edge's head.
        #[arg(long)]
        no_speedup: bool,
        /// Collapse parallel edges on load.
        #[arg(long)]
        dedupe: bool,
        /// Rank TSV destination (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a per-iteration CSV here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Reserved; the pipeline is deterministic.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Recompute agony for a rank file; with a certificate, check the
    /// optimality sandwich.
    Verify {
        input: PathBuf,
        #[arg(long)]
        ranks: PathBuf,
        /// Eulerian subgraph as an edge list.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        dedupe: bool,
    },
    /// Solve several inputs and print one summary row per run.
    Bench {
        inputs: Vec<PathBuf>,
        /// Restrict to one algorithm (default: both).
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
        #[arg(long, value_parser = parse_ratio, default_value = "0")]
        epsilon: agony_core::Ratio,
        #[arg(long)]
        no_speedup: bool,
        #[arg(long)]
        dedupe: bool,
        /// Directory for per-run trace CSVs.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version travel through the error path; they are
            // not usage mistakes
            let is_usage = err.use_stderr();
            let _ = err.print();
            return if is_usage {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Compute {
            input,
            algorithm,
            epsilon,
            no_speedup,
            dedupe,
            out,
            trace,
            seed,
        } => cmd_compute(&RunConfig {
            input,
            algorithm,
            epsilon,
            speedup: !no_speedup,
            dedupe,
            out,
            trace,
            seed,
        }),
        Command::Verify {
            input,
            ranks,
            certificate,
            dedupe,
        } => cmd_verify(&input, &ranks, certificate.as_deref(), dedupe),
        Command::Bench {
            inputs,
            algorithm,
            epsilon,
            no_speedup,
            dedupe,
            trace,
            seed: _,
        } => cmd_bench(
            &inputs,
            algorithm,
            &epsilon,
            !no_speedup,
            dedupe,
            trace.as_deref(),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("agony: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
