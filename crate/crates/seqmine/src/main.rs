use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seqmine::cli::{cmd_compile, cmd_match, cmd_mine, cmd_stats, Algorithm, RunConfig};
use seqmine::Error;

/// Frequent-sequence mining with pattern-expression constraints over
/// item hierarchies.
#[derive(Parser)]
#[command(name = "seqmine", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine frequent subsequences matching a pattern expression.
    Mine {
        /// Sequence database: one whitespace-separated sequence per line.
        #[arg(long)]
        data: PathBuf,
        /// Hierarchy edges: one `child<TAB>parent` pair per line.
        #[arg(long)]
        hierarchy: Option<PathBuf>,
        /// Pattern expression; captured groups `(...)` form the output.
        #[arg(long)]
        pattern: String,
        /// Minimum number of supporting sequences.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        sigma: u64,
        #[arg(long, value_enum, default_value_t = Algorithm::Dfs)]
        algorithm: Algorithm,
        /// Let matches start and end anywhere inside each sequence.
        #[arg(long)]
        partial: bool,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the subsequences each input sequence generates.
    Match {
        /// Sequences to match, one per line.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        hierarchy: Option<PathBuf>,
        #[arg(long)]
        pattern: String,
        /// Drop outputs containing items below this document frequency.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        sigma: Option<u64>,
        #[arg(long)]
        partial: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compile a pattern expression and print the resulting machine.
    Compile {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        hierarchy: Option<PathBuf>,
        /// Optional data file; item ids then follow its frequencies.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long)]
        partial: bool,
        /// Also write a Graphviz rendering to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print sequence database statistics.
    Stats {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err) => {
            // clap renders its own message (also for --help/--version).
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match std::panic::catch_unwind(|| run(args)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            match err {
                Error::Usage(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
        Err(_) => {
            // The default panic hook has already printed the message.
            eprintln!("error: internal invariant violated; this is a bug");
            ExitCode::from(3)
        }
    }
}

fn run(args: Args) -> seqmine::Result<()> {
    let (result, output) = match args.command {
        Command::Mine { data, hierarchy, pattern, sigma, algorithm, partial, output } => {
            let cfg = RunConfig {
                data: Some(data),
                hierarchy,
                pattern: Some(pattern),
                sigma: Some(sigma),
                algorithm,
                partial,
                dot: None,
            };
            (cmd_mine(&cfg)?, output)
        }
        Command::Match { input, hierarchy, pattern, sigma, partial, output } => {
            let cfg = RunConfig {
                data: Some(input),
                hierarchy,
                pattern: Some(pattern),
                sigma,
                partial,
                ..RunConfig::default()
            };
            (cmd_match(&cfg)?, output)
        }
        Command::Compile { pattern, hierarchy, data, partial, dot, output } => {
            let cfg = RunConfig {
                data,
                hierarchy,
                pattern: Some(pattern),
                partial,
                dot,
                ..RunConfig::default()
            };
            (cmd_compile(&cfg)?, output)
        }
        Command::Stats { data, output } => {
            let cfg = RunConfig { data: Some(data), ..RunConfig::default() };
            (cmd_stats(&cfg)?, output)
        }
    };
    match output {
        Some(path) => std::fs::write(path, result)?,
        None => print!("{result}"),
    }
    Ok(())
}
