//! Command-line front end for `wbcode`: bound tables, dual bases, encoding,
//! decoding, GHW bounds and a Monte-Carlo channel simulation.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wbcode::frdecode::Transcript;
use wbcode::wbcore::Variant;
use wbcode::DecodeFailure;

pub mod commands;
pub mod config;
pub mod sim;

pub use config::{Job, JobConfig, TableSource};
pub use sim::{simulate, FailureCounts, SimReport, WeightStats};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("decoding failed: {failure}")]
    Decode { failure: DecodeFailure, transcript: Transcript },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Decode { .. } => 2,
            CliError::Config(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<wbcode::Error> for CliError {
    fn from(e: wbcode::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "wbcode", version, about = "Feng-Rao bounds and majority-voting decoding from well-behaving pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-index sigma/mu values and the code's distance bounds.
    Bounds(Common),
    /// Dual basis `H` with `g_i . h_j = delta(i, n-j+1)`, written as a basis config.
    Dualize(Common),
    /// Encode a message with the primary code.
    Encode {
        #[command(flatten)]
        common: Common,
        /// Message coefficients, comma or space separated.
        #[arg(long)]
        message: String,
    },
    /// Decode a received word with majority voting.
    Decode {
        #[command(flatten)]
        common: Common,
        /// Received word, comma or space separated.
        #[arg(long)]
        received: String,
    },
    /// Random messages and random errors through the decoder.
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Error weight `t`, or a range `a-b`.
        #[arg(long)]
        weight: String,
        /// Trials per weight.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generalized Hamming weight bounds.
    Ghw {
        #[command(flatten)]
        common: Common,
        /// `t` or a range `a-b`; defaults to the config's `t`, else `1-dim`.
        #[arg(long)]
        t: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub config: PathBuf,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
    /// Overrides the config's variant.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Also write the JSON output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Wb,
    Owb,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Wb => Variant::Wb,
            VariantArg::Owb => Variant::Owb,
        }
    }
}

/// A command's result in both renderings.
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
}

impl Output {
    pub fn new(value: &impl Serialize, text: String) -> Output {
        Output { json: serde_json::to_value(value).expect("serializable output"), text }
    }
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Bounds(c) | Command::Dualize(c) => c,
            Command::Encode { common, .. }
            | Command::Decode { common, .. }
            | Command::Simulate { common, .. }
            | Command::Ghw { common, .. } => common,
        }
    }
}

/// Parses `"t"` or `"a-b"` into an inclusive range.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let bad = |e: std::num::ParseIntError| CliError::Config(format!("bad range {text:?}: {e}"));
    let range = match text.split_once('-') {
        Some((a, b)) => a.trim().parse().map_err(bad)?..=b.trim().parse().map_err(bad)?,
        None => {
            let t = text.trim().parse().map_err(bad)?;
            t..=t
        }
    };
    if range.is_empty() {
        return Err(CliError::Config(format!("empty range {text:?}")));
    }
    Ok(range)
}

pub fn run(command: &Command) -> Result<Output, CliError> {
    let common = command.common();
    let mut job = config::load(&common.config)?.resolve()?;
    if let Some(v) = common.variant {
        job.variant = v.into();
    }
    let output = match command {
        Command::Bounds(_) => commands::bounds(&job)?,
        Command::Dualize(_) => commands::dualize(&job)?,
        Command::Encode { message, .. } => commands::encode(&job, message)?,
        Command::Decode { received, .. } => commands::decode(&job, received)?,
        Command::Simulate { weight, trials, seed, .. } => commands::simulate(&job, weight, *trials, *seed)?,
        Command::Ghw { t, .. } => commands::ghw(&job, t.as_deref())?,
    };
    if let Some(path) = &common.out {
        let text = serde_json::to_string_pretty(&output.json).expect("json value");
        std::fs::write(path, text + "\n")?;
    }
    Ok(output)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert_eq!(parse_range("1-4").unwrap(), 1..=4);
        assert!(matches!(parse_range("4-1"), Err(CliError::Config(_))));
        assert!(matches!(parse_range("x"), Err(CliError::Config(_))));
    }
}
