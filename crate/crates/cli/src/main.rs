use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use frieze_cli::app::{run, Cli, CliError};

fn report(e: &CliError) {
    eprintln!("{}", e.to_json());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report(&CliError::Usage(e.render().to_string().trim_end().to_string()));
            return ExitCode::from(3);
        }
    };
    let code = match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.stdout.as_bytes());
            let _ = out.flush();
            if let Some(e) = &outcome.error {
                report(e);
            }
            outcome.code
        }
        Err(e) => {
            report(&e);
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
