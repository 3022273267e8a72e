use std::process::ExitCode;

fn main() -> ExitCode {
    chsh_lab::cli::run()
}
