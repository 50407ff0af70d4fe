use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = momentlab::cli::run_from_args(std::env::args_os());
    print!("{}", outcome.artifact);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.message);
    ExitCode::from(outcome.code as u8)
}
