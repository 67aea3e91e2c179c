use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(artin_randlab::cli::run(std::env::args_os()))
}
