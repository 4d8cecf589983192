use std::process::ExitCode;

use bbk_cli::{run, RunConfig};
use clap::error::ErrorKind;
use clap::Parser;

const STACK_BYTES: usize = 512 << 20;

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };

    // Deep recursions on large graphs need more than the default main stack.
    let worker = std::thread::Builder::new().stack_size(STACK_BYTES).spawn(move || run(&config));
    let outcome = match worker {
        Ok(handle) => handle.join().expect("enumeration thread panicked"),
        Err(e) => {
            eprintln!("bbk: cannot start worker thread: {e}");
            return ExitCode::from(1);
        }
    };
    match outcome {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bbk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
