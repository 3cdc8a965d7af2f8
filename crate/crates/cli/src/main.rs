use std::process::ExitCode;

use clap::Parser;

use k3walls_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => {
            std::fs::write(path, &out.body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(out.body.as_bytes()).map_err(|e| e.to_string())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if !out.complete {
        eprintln!("warning: search possibly incomplete; raise --r-max");
        if cli.strict_complete {
            return ExitCode::from(3);
        }
    }
    ExitCode::SUCCESS
}
