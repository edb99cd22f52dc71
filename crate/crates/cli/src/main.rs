use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use grover_abszeta_cli::args::Cli;
use grover_abszeta_cli::commands;
use grover_abszeta_cli::config::Settings;
use grover_abszeta_cli::error::CliError;
use grover_abszeta_cli::report::error_json;

fn main() -> ExitCode {
    // clap prints usage errors itself and exits with status 2.
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            if cli.json {
                println!("{}", error_json(cli.command_name(), cli.n(), &err));
            } else {
                eprintln!("error: {err}");
            }
            err.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let settings = Settings::resolve(cli.config.as_deref(), &cli.overrides())?;
    let output = commands::run(cli, &settings)?;
    let text = match (&output.csv, cli.json) {
        (Some(csv), false) => csv.clone(),
        _ => output.report.render(&settings, cli.json),
    };
    let mut stdout = std::io::stdout().lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = stdout.write_all(text.as_bytes());
    Ok(output.report.exit_code)
}
