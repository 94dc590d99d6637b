//! `invq`: command-line front end for the exact verifications and bounds.

mod args;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format, Range};
use commands::{Report, Status};
use error::CliError;

const DEFAULT_RANGE: Range = Range { start: 2, end: 50 };

fn render(report: &Report, format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str(report.csv_header);
        out.push('\n');
    }
    for r in &report.records {
        let line = match format {
            Format::Json => r.json.to_string(),
            Format::Csv => r.csv.join(","),
            Format::Text => r.text.clone(),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<Status, CliError> {
    let c = &cli.common;
    let range = c.range.unwrap_or(DEFAULT_RANGE);
    let report = match cli.command {
        Command::Verify { identity } => commands::cmd_verify(identity, c.range, c.jobs)?,
        Command::Bounds => commands::cmd_bounds(range, &c.tol, c.bits, c.jobs)?,
        Command::Figure => commands::cmd_figure(range, &c.tol, c.jobs)?,
        Command::Asymptotics { ns } => {
            let ns = if ns.is_empty() { range.iter().collect() } else { ns };
            commands::cmd_asymptotics(ns, &c.tol, c.bits, c.jobs)?
        }
        Command::Boundary => commands::cmd_boundary(range, c.jobs)?,
    };
    let text = render(&report, c.format);
    match &c.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(report.status())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Ok(Status::Undecided) => ExitCode::from(3),
        Err(e) => {
            eprintln!("invq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
