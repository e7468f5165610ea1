use std::process::ExitCode;

fn main() -> ExitCode {
    assoc_scheme::cli::run()
}
