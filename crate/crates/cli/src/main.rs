//! `quasidom`: exact quasiperfect domination from the command line.

mod commands;
mod error;
mod input;

use clap::{Parser, Subcommand};
use commands::{Ctx, FilterArgs, Format, TimeLimit};
use error::CliError;
use input::GraphInput;
use quasidom::par::configure_threads;
use quasidom::Exec;
use std::io::{self, BufWriter, ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "quasidom", version, about = "Exact k-quasiperfect domination for small graphs")]
struct Cli {
    /// Worker threads for enumerate, witness and verify.
    #[arg(long, global = true, env = "QUASIDOM_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Emit JSON (one document per line) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// γ₁ₖ (or γ without --k) of each input graph, with a witness.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Neighbor cap k; omit for plain domination. Values above Δ are clamped.
        #[arg(short, long)]
        k: Option<usize>,
        #[command(flatten)]
        limit: TimeLimit,
    },
    /// The full chain γ₁₁ ≥ … ≥ γ₁Δ = γ of each input graph.
    Chain {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        limit: TimeLimit,
    },
    /// Build a family member and print it.
    Gen {
        /// Family spec, e.g. `cycle:9`, `biclique:2,4`, `join:star:4,path:3`.
        spec: String,
        /// Output format: graph6, or the edge list `n; u v; ...`.
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Every connected graph of one order passing the filters, up to isomorphism.
    Enumerate {
        #[command(flatten)]
        filter: FilterArgs,
        /// Print only the number of classes.
        #[arg(long)]
        count_only: bool,
    },
    /// The first class passing the filters with the requested γ₁₁.
    Witness {
        #[command(flatten)]
        filter: FilterArgs,
        /// Required perfect domination number γ₁₁.
        #[arg(long)]
        gamma11: Option<usize>,
    },
    /// Run a claim suite, or `all` of them.
    Verify {
        /// short-chain, delta-n2, delta-n3, delta3, join-cograph, clawfree, clawfree-scan, technical or all.
        suite: String,
        /// Exhaustion ceiling (join order for join-cograph, scan order for clawfree-scan).
        #[arg(long)]
        n_max: Option<usize>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the 0-1 program for γ₁ₖ in LP format.
    ExportIlp {
        #[command(flatten)]
        input: GraphInput,
        /// Neighbor cap k (at least 1).
        #[arg(short, long)]
        k: usize,
        /// Write the LP file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Perfect dominating sets certified by degree-3 cycles, paths, or the tree construction.
    Certificate {
        #[command(flatten)]
        input: GraphInput,
    },
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if cli.jobs == 0 {
        return Err(CliError::Input("--jobs must be at least 1".into()));
    }
    if cli.jobs > 1 {
        configure_threads(cli.jobs);
    }
    let mut ctx = Ctx {
        json: cli.json,
        exec: Exec::from_jobs(cli.jobs),
        out,
    };
    match &cli.command {
        Command::Compute { input, k, limit } => commands::compute(&mut ctx, input, *k, limit),
        Command::Chain { input, limit } => commands::chain(&mut ctx, input, limit),
        Command::Gen { spec, format } => commands::gen(&mut ctx, spec, *format),
        Command::Enumerate { filter, count_only } => commands::enumerate_cmd(&mut ctx, filter, *count_only),
        Command::Witness { filter, gamma11 } => commands::witness(&mut ctx, filter, *gamma11),
        Command::Verify { suite, n_max, report } => commands::verify(&mut ctx, suite, *n_max, report.as_ref()),
        Command::ExportIlp { input, k, output } => commands::export_ilp(&mut ctx, input, *k, output.as_ref()),
        Command::Certificate { input } => commands::certificate(&mut ctx, input),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("quasidom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
