//! Command-line interface: scenario files through reasoning and solver, plan
//! inspection, graph export, verification suites, and parameter sweeps.

pub mod commands;
pub mod overrides;

pub use commands::{
    cmd_graph, cmd_plan, cmd_run, cmd_sweep, cmd_verify, exit_code_for, resolve_out_dir,
    EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK, EXIT_PHYSICAL_FAILURE, EXIT_VERIFY_FAILED,
};

use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use crate::harness::Suite;
use crate::solver::config::Mode;

#[derive(Parser)]
#[command(
    name = "mechcomplete",
    version,
    about = "Regime-aware mechanism completion for coupled thermo-hydro-mechanical simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the regime report, pruned/activated mechanisms, and the plan
    Plan {
        /// Scenario file (TOML or JSON)
        scenario: PathBuf,
        /// Skill file; the built-in library is used when omitted
        #[arg(long)]
        skills: Option<PathBuf>,
        /// Dotted-path overrides, e.g. --set material.k=1e-20
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// Export the causal graph as DOT text
    Graph {
        scenario: PathBuf,
        #[arg(long)]
        skills: Option<PathBuf>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// Run the simulation; writes trace CSV, snapshots and MANIFEST.txt
    Run {
        scenario: PathBuf,
        /// auto (reasoned plan), naive, or completed
        #[arg(long, default_value = "auto")]
        mode: String,
        /// Output directory (default: $MECHCOMPLETE_OUT or ./out)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        skills: Option<PathBuf>,
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// Run verification suites against their declared tolerances
    Verify {
        /// all | capillary | pressurization | deborah | stresspath | fields
        #[arg(long, default_value = "all")]
        suite: String,
        /// Scenario file; the built-in reference scenario is used when omitted
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// One reasoned+solved run per parameter value; rows sorted by value
    Sweep {
        scenario: PathBuf,
        /// Dotted parameter path, e.g. material.k
        #[arg(long)]
        param: String,
        /// Comma-separated values
        #[arg(long, value_delimiter = ',')]
        values: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Concurrent rows
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long = "set")]
        set: Vec<String>,
    },
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_CONFIG
            } else {
                EXIT_OK
            };
            let _ = err.print();
            return code;
        }
    };

    let outcome = match cli.command {
        Command::Plan {
            scenario,
            skills,
            set,
        } => commands::cmd_plan(&scenario, skills.as_deref(), &set),
        Command::Graph {
            scenario,
            skills,
            out,
            set,
        } => commands::cmd_graph(&scenario, skills.as_deref(), out.as_deref(), &set),
        Command::Run {
            scenario,
            mode,
            out,
            skills,
            set,
        } => Mode::from_str(&mode).and_then(|mode| {
            commands::cmd_run(
                &scenario,
                mode,
                &commands::resolve_out_dir(out),
                skills.as_deref(),
                &set,
            )
        }),
        Command::Verify {
            suite,
            scenario,
            out,
            set,
        } => Suite::from_str(&suite).and_then(|suite| {
            commands::cmd_verify(
                suite,
                scenario.as_deref(),
                &commands::resolve_out_dir(out),
                &set,
            )
        }),
        Command::Sweep {
            scenario,
            param,
            values,
            out,
            jobs,
            set,
        } => commands::cmd_sweep(
            &scenario,
            &param,
            &values,
            &commands::resolve_out_dir(out),
            jobs,
            &set,
        ),
    };

    match outcome {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            commands::exit_code_for(&error)
        }
    }
}
