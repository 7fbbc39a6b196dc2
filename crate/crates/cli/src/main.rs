use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use resreg_cli::{run, Cli, CliError};

fn emit(body: &str, out: Option<&std::path::Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.command.common().out.clone();
    let code = match run(&cli).and_then(|report| emit(&report.body, out.as_deref()).map(|()| report.status)) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    ExitCode::from(code as u8)
}
