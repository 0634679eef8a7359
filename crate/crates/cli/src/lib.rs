//! Command-line front end: streams the scaled solution family, runs the
//! batch verifier, proves the evenness identity, and prints generating
//! function expansions.

pub mod commands;
pub mod record;

use std::io::Write;

use anyhow::Result;
use clap::{Parser, Subcommand};

use quintic::{Execution, GfKind};

use commands::{CoeffFormat, Outcome, RecordFormat};

#[derive(Debug, Parser)]
#[command(
    name = "quintic",
    version,
    about = "Gaussian-integer solutions of A^5 + B^5 = C^5 ± 1"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit verified records (a_n, b_n, c_n, ±1) for n = 0..count-1.
    Gen {
        #[arg(short = 'n', long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
        #[arg(short, long, value_enum, default_value_t = RecordFormat::Json)]
        format: RecordFormat,
        /// Distribute indices over a thread pool; output order is unchanged.
        #[arg(long)]
        parallel: bool,
    },
    /// Run every consistency check for n = 0..count-1.
    Verify {
        #[arg(short = 'n', long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
        #[arg(long)]
        parallel: bool,
    },
    /// Expand g symbolically and check that it is even in x.
    Identity {
        #[arg(long, hide = true)]
        inject_sign_error: bool,
    },
    /// Print series coefficients of a generating function.
    Gf {
        /// One of a, b, c, a_raw, b_raw, c_raw.
        #[arg(short, long, default_value = "a")]
        which: GfKind,
        #[arg(short = 'n', long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
        #[arg(short, long, value_enum, default_value_t = CoeffFormat::Text)]
        format: CoeffFormat,
    },
}

fn execution(parallel: bool) -> Execution {
    if parallel {
        Execution::Parallel
    } else {
        Execution::Sequential
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::Gen {
            count,
            format,
            parallel,
        } => commands::cmd_gen(count, format, execution(parallel), out, err),
        Command::Verify { count, parallel } => {
            commands::cmd_verify(count, execution(parallel), out, err)
        }
        Command::Identity { inject_sign_error } => {
            commands::cmd_identity(inject_sign_error, out, err)
        }
        Command::Gf {
            which,
            count,
            format,
        } => commands::cmd_gf(which, count, format, out, err),
    }
}
