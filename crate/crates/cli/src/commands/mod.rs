//! One function per subcommand, each returning a [`Report`].

mod abszeta;
mod analyze;
mod reproduce;
mod zeta;

pub use abszeta::{abszeta, series};
pub use analyze::{analyze, period};
pub use reproduce::reproduce;
pub use zeta::zeta;

use crate::args::{Cli, Command};
use crate::config::Settings;
use crate::error::CliResult;
use crate::report::Report;

/// Output of a command: the report and, for `--csv`, the grid as CSV text.
pub struct Output {
    pub report: Report,
    pub csv: Option<String>,
}

pub fn run(cli: &Cli, settings: &Settings) -> CliResult<Output> {
    let mut csv = None;
    let report = match &cli.command {
        Command::Analyze { n, .. } => analyze(*n, settings)?,
        Command::Period { n, method, .. } => period(*n, *method, settings)?,
        Command::Zeta { n, at } => zeta(*n, at.as_deref(), settings)?,
        Command::Abszeta(args) => abszeta(args, settings, &mut csv)?,
        Command::Series(args) => series(args, settings)?,
        Command::Reproduce { only, .. } => reproduce(only, settings)?,
    };
    Ok(Output { report, csv })
}
