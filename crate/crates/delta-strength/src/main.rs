use std::process::ExitCode;

use delta_strength::{run, STEP_CAP_ENV};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let step_cap = match std::env::var(STEP_CAP_ENV) {
        Ok(raw) => match raw.parse::<u64>() {
            Ok(cap) => Some(cap),
            Err(e) => {
                eprintln!("error: {STEP_CAP_ENV}={raw}: {e}");
                return ExitCode::from(1);
            }
        },
        Err(_) => None,
    };
    match run(&args, step_cap) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(u8::try_from(err.exit_code()).unwrap_or(1))
        }
    }
}
