//! `farey-ring`: command-line front end for the group-ring and sumset toolkit.
//!
//! Reports go to standard output as CSV (with a header row) or JSON; errors go
//! to standard error. Exit codes: 0 success, 1 verification failure or I/O
//! error, 2 invalid arguments, 3 resource limit exceeded.

mod cache;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use farey_ring::Error;

#[derive(Debug, Parser)]
#[command(name = "farey-ring", version, about = "Exact group-ring, Farey sumset and divisor-clustering computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Number of workers for the streaming sumset count. Results do not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    pub shards: usize,

    /// Smallest-prime-factor cache file (read if valid, written otherwise).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F_q * F_r in class-sum coordinates.
    RingMul {
        #[arg(long = "q")]
        q: u64,
        #[arg(long = "r")]
        r: u64,
    },
    /// Check the closed-form product against the convolution for all q, r <= limit.
    RingVerify {
        #[arg(long)]
        limit: u64,
    },
    /// Exact I_Q(k) = |F_Q + ... + F_Q|.
    SumsetCount {
        #[arg(long = "Q")]
        big_q: u64,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Enumerate the k-fold sumset of F_Q directly.
    SumsetBrute {
        #[arg(long = "Q")]
        big_q: u64,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Smallest k with log I_Q(k) >= c log |G_Q|, with the full trace.
    ScanK {
        #[arg(long = "Q")]
        big_q: u64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
    /// The set L(a) and its measure.
    ClusterMeasure {
        #[arg(long)]
        a: u64,
    },
    /// Weighted L-measure sum over squarefree a <= Q and its normalized ratio.
    FordSum {
        #[arg(long = "Q")]
        big_q: u64,
    },
    /// Ratio rows for a comma-separated list of Q.
    Theorem1Table {
        #[arg(long = "Q", value_delimiter = ',', required = true)]
        big_q: Vec<u64>,
    },
    /// Members of A_Q up to Q^2/2, or the witnesses of a single n.
    AqScan {
        #[arg(long = "Q")]
        big_q: u64,
        #[arg(long)]
        n: Option<u64>,
    },
}

/// Failure of a verification command, distinct from library errors.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

fn exit_code(failure: &Failure) -> u8 {
    match failure {
        Failure::Lib(Error::InvalidArgument(_) | Error::OutOfRange { .. }) => 2,
        Failure::Lib(Error::ResourceLimit(_)) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Mismatch(msg) => eprintln!("verification failed: {msg}"),
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}
