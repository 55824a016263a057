use std::process::ExitCode;

fn main() -> ExitCode {
    drinfeld::cli::run()
}
