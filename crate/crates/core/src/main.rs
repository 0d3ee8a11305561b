use std::io::ErrorKind;

use clap::Parser;

use lerchlab::harness::cli::{error_code, run, Cli};
use lerchlab::Error;

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        // a closed pipe downstream is not our failure
        Err(Error::Io(e)) if e.kind() == ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    };
    std::process::exit(code);
}
