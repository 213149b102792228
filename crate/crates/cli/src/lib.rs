//! Command-line front end for `geronimus-core`: CSV/JSON tables for every
//! operation and the acceptance checks.

pub mod checks;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::{Cli, RunConfig};
pub use error::{CliError, CliResult};
