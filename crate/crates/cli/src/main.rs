use std::process::ExitCode;

use clap::Parser;
use serde_json::json;
use wbcode_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.command.common().json;
    match run(&cli.command) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json value"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::Decode { failure, transcript } = &err {
                if json {
                    let detail = json!({ "status": "decode_failure", "failure": failure, "transcript": transcript });
                    println!("{}", serde_json::to_string_pretty(&detail).expect("json value"));
                }
            }
            eprintln!("wbcode: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
