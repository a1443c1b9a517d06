use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Hilbert series and Lefschetz properties of monomial almost complete
/// intersections.
#[derive(Debug, Parser)]
#[command(name = "lefschetz", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads (default: available cores).
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    /// Use a linear form with random coefficients in 1..=20 drawn from SEED.
    #[arg(long, global = true, value_name = "SEED")]
    pub random_form: Option<u64>,

    /// Number of variables, if larger than the highest index in the ideal.
    #[arg(long, global = true, value_name = "N")]
    pub vars: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert series of R/I.
    Hilbert { ideal: String },

    /// Decide the weak and/or strong Lefschetz property by exact ranks.
    Check {
        #[arg(long)]
        wlp: bool,

        #[arg(long)]
        slp: bool,

        /// Write every multiplication matrix to FILE as plain integer rows.
        #[arg(long, value_name = "FILE")]
        dump_matrices: Option<PathBuf>,

        ideal: String,
    },

    /// Closed-form SLP verdict for an almost complete intersection.
    Classify { ideal: String },

    /// Central simple modules for multiplication by one variable.
    Csm {
        /// 1-based variable index
        #[arg(long)]
        var: usize,

        ideal: String,
    },

    /// Compare closed-form verdicts with the rank oracle over a grid.
    Survey {
        /// grid as inline JSON or a path to a JSON file
        grid: String,

        #[arg(long)]
        out: PathBuf,

        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}
