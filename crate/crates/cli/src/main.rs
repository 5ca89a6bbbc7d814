use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Spanning trees with alternating sign labelings.
#[derive(Parser)]
#[command(name = "altsign", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum InputFormat {
    #[default]
    Edgelist,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Find a spanning tree and an alternating sign labeling.
    Solve {
        /// Graph file, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long, value_enum, default_value_t)]
        format: InputFormat,
        /// Also write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check a solution report against a graph.
    Verify {
        graph: String,
        solution: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: InputFormat,
    },
    /// Brute-force checks on all connected graphs of a size, or on one graph.
    Oracle {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n: Option<usize>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long, value_enum, default_value_t)]
        format: InputFormat,
        /// Write JSON lines here instead of stdout.
        #[arg(long)]
        jsonl: Option<PathBuf>,
    },
    /// Generate a graph in edge-list format.
    Gen {
        /// Family name: path, cycle, complete, complete_bipartite, grid, hypercube.
        #[arg(required_unless_present = "gnp", conflicts_with = "gnp")]
        family: Option<String>,
        params: Vec<usize>,
        /// Erdős–Rényi graph: N P SEED.
        #[arg(long, num_args = 3, value_names = ["N", "P", "SEED"])]
        gnp: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the solver over a family of graphs and write CSV.
    Bench {
        /// A named family or "gnp".
        #[arg(long)]
        family: String,
        /// Comma-separated sizes or ranges, e.g. "10,20" or "10..100:10".
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// Edge probability for the gnp family.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve { input, root, format, dot, json } => {
            commands::solve(&input, root, format, dot.as_deref(), json.as_deref())
        }
        Command::Verify { graph, solution, format } => commands::verify(&graph, &solution, format),
        Command::Oracle { n, input, root, format, jsonl } => {
            commands::oracle(n, input.as_deref(), root, format, jsonl.as_deref())
        }
        Command::Gen { family, params, gnp, out } => {
            commands::gen(family.as_deref(), &params, gnp.as_deref(), out.as_deref())
        }
        Command::Bench { family, sizes, seeds, p, csv } => {
            commands::bench(&family, &sizes, seeds, p, csv.as_deref())
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
