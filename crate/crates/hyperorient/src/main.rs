use std::process::ExitCode;

use clap::Parser;
use hyperorient::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, report) = run(&cli);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report) {
                eprintln!("ERROR Io\n{}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{report}"),
    }
    ExitCode::from(code as u8)
}
