use std::process::ExitCode;

use clap::Parser;
use geronimus_cli::{commands, Cli, RunConfig};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("GL_LOG"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    let result = RunConfig::from_flags(cli.command.kind(), cli.command.flags()).and_then(|cfg| commands::run(&cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lgq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
