use std::process::ExitCode;

use wpl_cli::{parse_args, run, USAGE};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let command = match parse_args(&args) {
        Ok(cmd) => cmd,
        Err(err) => {
            eprintln!("error: {err}");
            eprintln!("{USAGE}");
            return ExitCode::from(2);
        }
    };
    let (code, document) = run(&command);
    print!("{document}");
    ExitCode::from(code as u8)
}
