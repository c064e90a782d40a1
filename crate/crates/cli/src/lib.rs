//! Command-line front end for `doublelift`: file format, reports and subcommands.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{run, Cli, Command};
pub use error::CliError;
pub use format::Document;
pub use report::Report;
