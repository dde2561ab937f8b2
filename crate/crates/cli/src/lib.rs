//! Command-line front end: parses arguments, runs the `verma-core`
//! computations and renders text, JSON, DOT or LaTeX.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 precondition violation,
//! 4 verification mismatch.

mod commands;
pub mod parse;
mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use verma_core::LieType;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "verma", version, about = "Exact root systems, Verma module reducibility and parabolic data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    /// Only valid for `multiplet`.
    Dot,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Emit a LaTeX tabular instead of the plain-text table.
    #[arg(long)]
    pub latex: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the positive roots of a classical type such as A3 or D4.
    Roots {
        #[arg(value_parser = parse_lie_type)]
        lie_type: LieType,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Enumerate all standard parabolics P_S with their root splitting.
    Parabolics {
        #[arg(value_parser = parse_lie_type)]
        lie_type: LieType,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// BGG reducibility set of a (parabolic) Verma module.
    Reduce {
        #[arg(value_parser = parse_lie_type)]
        lie_type: LieType,
        /// Dynkin labels, e.g. 0,-1/2,0
        #[arg(long, allow_hyphen_values = true)]
        labels: String,
        /// Simple-root subset S, e.g. 1,3
        #[arg(long)]
        parabolic: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Embedding graph generated from a seed weight.
    Multiplet {
        #[arg(value_parser = parse_lie_type)]
        lie_type: LieType,
        #[arg(long, allow_hyphen_values = true)]
        labels: String,
        #[arg(long)]
        parabolic: Option<String>,
        /// Also show shifts whose target leaves P_S, as dashed leaves.
        #[arg(long)]
        keep_dropped: bool,
        /// Override the vertex safety bound.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimal parabolic of a classical real form, e.g. `su 2 2`, `su* 4`, `so 5 3`.
    Realform {
        family: String,
        #[arg(required = true, num_args = 1..=2)]
        params: Vec<usize>,
        /// Cross-check the closed forms against the complex root data.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify every catalogued real form up to a complex rank, in parallel.
    Grid {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// su(2,2) signatures: weights, Harish-Chandra parameters, reducibility.
    Conformal {
        #[command(flatten)]
        signature: ConformalSignature,
        /// Append the su(2,2) parabolic table.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct ConformalSignature {
    /// Non-cuspidal signature j1,j2,d
    #[arg(long, allow_hyphen_values = true)]
    pub signature: Option<String>,
    /// Cuspidal signature n',k,eps,nu'
    #[arg(long, allow_hyphen_values = true)]
    pub cuspidal: Option<String>,
    /// Integral cuspidal parameters p,nu,n
    #[arg(long)]
    pub cusp_triple: Option<String>,
}

fn parse_lie_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: verma_core::Error| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(#[from] verma_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

/// What to print and which exit code to use.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, exit_code: 0 }
    }
}

fn check_format(cmd: &str, out: &OutputArgs, dot_ok: bool) -> Result<(), CliError> {
    if out.format == OutputFormat::Dot && !dot_ok {
        return Err(CliError::Usage(format!(
            "--format dot is only available for multiplet, not {cmd}"
        )));
    }
    if out.latex && out.format != OutputFormat::Text {
        return Err(CliError::Usage("--latex cannot be combined with --format json/dot".into()));
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Roots { lie_type, out } => {
            check_format("roots", &out, false)?;
            commands::roots(lie_type, &out).map(Output::ok)
        }
        Command::Parabolics { lie_type, out } => {
            check_format("parabolics", &out, false)?;
            commands::parabolics(lie_type, &out).map(Output::ok)
        }
        Command::Reduce {
            lie_type,
            labels,
            parabolic,
            out,
        } => {
            check_format("reduce", &out, false)?;
            commands::reduce(lie_type, &labels, parabolic.as_deref(), &out).map(Output::ok)
        }
        Command::Multiplet {
            lie_type,
            labels,
            parabolic,
            keep_dropped,
            cap,
            out,
        } => {
            check_format("multiplet", &out, true)?;
            commands::multiplet(lie_type, &labels, parabolic.as_deref(), keep_dropped, cap, &out)
                .map(Output::ok)
        }
        Command::Realform {
            family,
            params,
            verify,
            out,
        } => {
            check_format("realform", &out, false)?;
            commands::realform(&family, &params, verify, &out)
        }
        Command::Grid { max_rank, out } => {
            check_format("grid", &out, false)?;
            commands::grid(max_rank, &out)
        }
        Command::Conformal {
            signature,
            table,
            out,
        } => {
            check_format("conformal", &out, false)?;
            commands::conformal(&signature, table, &out).map(Output::ok)
        }
    }
}
