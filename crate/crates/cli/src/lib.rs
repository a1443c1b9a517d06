//! Command-line front end for `lefschetz-core`.

pub mod args;
pub mod commands;
pub mod survey;

pub use args::Cli;
pub use commands::{exit_code_for, run, Output};
pub use survey::SurveyRow;
