//! Command-line front end for `grover-abszeta`: argument parsing, config
//! files, the subcommands, JSON/CSV/text reports and the acceptance suite.

pub mod args;
pub mod claims;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;
