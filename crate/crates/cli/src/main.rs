use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gl3cg_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = gl3cg_cli::run(&cli);
    // a closed pipe is not worth reporting
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(u8::try_from(out.code).unwrap_or(3))
}
