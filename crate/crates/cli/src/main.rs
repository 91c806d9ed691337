mod args;
mod check;
mod construct;
mod io;
mod sample;
mod search;
mod solve;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use lhc::format::render_text;

use args::{Cli, Command};
use io::{read_document, Failure, Outcome, USAGE};

fn show(path: &std::path::Path) -> Outcome {
    let doc = read_document(path)?;
    print!("{}", render_text(&doc.object)?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // exit quietly when a reader such as `head` closes the pipe early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE),
            };
        }
    };
    let outcome = match &cli.command {
        Command::Construct(a) => construct::run(a),
        Command::Check(a) => check::run(a),
        Command::Solve(a) => solve::run(a),
        Command::Search(a) => search::run(a),
        Command::Sample(a) => sample::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Show { input } => show(input),
    };
    outcome.unwrap_or_else(|Failure { code, message }| {
        eprintln!("error: {message}");
        ExitCode::from(code)
    })
}
