use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sibirsky_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            eprintln!("elapsed: {:.3}s", outcome.elapsed.as_secs_f64());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("sibirsky: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
