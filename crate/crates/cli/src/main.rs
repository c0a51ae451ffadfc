mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "lkconv", version, about = "l^k-convexity on graphs: operators, recognizers, and the exhaustive geometry oracle")]
struct Cli {
    /// Print a single JSON report on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Extra notes on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph file, canonical (`n m` / `u v`) or DIMACS (`p edge n m` / `e u v`).
    file: PathBuf,

    /// Path length bound.
    #[arg(short, long, default_value_t = 3)]
    k: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph is an l^2 or l^3 convex geometry.
    Recognize {
        file: PathBuf,
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
        k: u8,
    },
    /// The interval I[u,v].
    Interval {
        #[command(flatten)]
        input: GraphInput,
        /// Two vertex labels, e.g. `1,7`.
        #[arg(long)]
        pair: String,
    },
    /// The hull of a set, with every iterate.
    Hull {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated vertex labels.
        #[arg(long)]
        set: String,
    },
    /// Extreme points of a convex set.
    Extremes {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated vertex labels; defaults to all vertices.
        #[arg(long)]
        set: Option<String>,
    },
    /// Induced gems and whether each one is solved.
    Gems {
        file: PathBuf,
        /// Smallest base order (edges on the base path).
        #[arg(long, default_value_t = 4)]
        min_n: usize,
    },
    /// Exhaustive convex-geometry check.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        /// Largest vertex count accepted (default: $CONVEXITY_MAX_N, else 16).
        #[arg(long)]
        max_n: Option<usize>,
        /// List every violating convex set, not just the first.
        #[arg(long)]
        all: bool,
    },
    /// Compare a recognizer with the oracle over graph families.
    Crosscheck {
        #[arg(short, long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
        k: u8,
        /// Every connected labeled graph on up to N vertices.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        exhaustive_n: Option<u8>,
        /// Number of random chordal instances.
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Largest random instance.
        #[arg(long, default_value_t = 12)]
        size: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write each mismatching graph here.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Write a graph from a named family.
    Generate {
        family: Family,
        /// Vertex count, or base order for `gem`.
        #[arg(short, long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge density for `chordal` and `random`.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Emit 1-based DIMACS instead of the canonical format.
        #[arg(long)]
        dimacs: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Show that l^3-convex geometries are not closed under vertex deletion.
    DemoNonHereditary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Figure2,
    Gem,
    Path,
    Cycle,
    Complete,
    Star,
    TriviallyPerfect,
    Chordal,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let ctx = commands::Context { verbose: cli.verbose };
    match commands::run(&ctx, cli.command) {
        Ok(out) => {
            let code = out.outcome.code();
            if cli.json {
                let report = RunReport {
                    command: std::env::args().skip(1).collect(),
                    input: out.input,
                    outcome: out.outcome,
                    exit_code: code,
                    result: out.result,
                    wall_ms: start.elapsed().as_secs_f64() * 1e3,
                };
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
