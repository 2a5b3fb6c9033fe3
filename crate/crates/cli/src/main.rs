//! `revsc`: classify automata, generate witnesses, evaluate bounds, and run
//! the exhaustive search from the command line.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "revsc",
    version,
    about = "State complexity of the reverse of R- and J-trivial languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tsv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum WitnessFamily {
    Fig2,
    Fig5,
    Table1,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    R,
    J,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    R,
    J,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DeadArg {
    Require,
    Forbid,
    Any,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print sc, sc of the reverse, and the partial-order / R / J verdicts
    Classify {
        automaton: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit a witness automaton
    Witness {
        #[arg(long, value_enum)]
        family: WitnessFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the automaton here and the statistics to stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a closed-form bound on the reverse
    Bound {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Compile a regular expression to its minimal DFA
    Regex {
        expression: String,
        /// Comma-separated letter names
        #[arg(long, default_value = "a,b")]
        alphabet: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive worst-case search over minimal partially ordered DFAs
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "r")]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "any")]
        dead: DeadArg,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        #[arg(long)]
        no_symmetry: bool,
        /// Append a Table-1 shaped row to this file
        #[arg(long)]
        tsv: Option<PathBuf>,
        /// Write the witness automaton JSON here
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Transcode an automaton between JSON and DOT
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the binary R-trivial search for n = 2..=max-n and print the table
    #[command(name = "reproduce-table1")]
    ReproduceTable1 {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Directory receiving one witness JSON per cell
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            if let Some(dump) = &e.dump {
                eprintln!("offending automaton:\n{dump}");
            }
            ExitCode::from(e.code)
        }
    }
}
