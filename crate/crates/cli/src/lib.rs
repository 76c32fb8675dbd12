//! Command-line front end for `qgr-core`: an expression parser, the `qgr`
//! subcommands and their text/JSON reports.

pub mod commands;
pub mod config;
pub mod parse;

pub use commands::{run, Cli, CliError, Outcome, Report};
pub use config::{Caps, Config};
pub use parse::{parse_expr, render, ParseError, Parsed};
