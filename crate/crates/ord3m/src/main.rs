use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = ord3m::cli::execute(std::env::args());
    if code == ord3m::cli::EXIT_ERROR {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    ExitCode::from(code as u8)
}
