use std::process::ExitCode;

use clap::Parser;
use hk_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.pretty {
                print!("{}", out.to_table());
            } else {
                println!("{}", out.to_json());
            }
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!(
                "{}",
                serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() })
            );
            ExitCode::from(e.exit_code())
        }
    }
}
