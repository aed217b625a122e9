use std::io::IsTerminal;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let is_terminal = stdout.is_terminal();
    let mut out = stdout.lock();
    let mut err = std::io::stderr().lock();
    let code = intrank::cli::run(std::env::args_os(), &mut out, &mut err, is_terminal);
    ExitCode::from(code as u8)
}
