use std::process::ExitCode;

use clap::Parser;

use gamma_audit::cli::{run, Cli};

fn main() -> ExitCode {
    // Usage errors exit with code 2 (clap's convention) before we get here.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
