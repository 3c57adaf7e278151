use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use hncalc::{run, Cli};

const VIOLATION_EXIT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if out.violations > 0 {
                eprintln!("hncalc: violation: count={}", out.violations);
                ExitCode::from(VIOLATION_EXIT)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("hncalc: {}: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
