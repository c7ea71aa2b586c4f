use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut diag = io::stderr();
    let code = zetafam_cli::main_with_args(std::env::args_os(), &mut out, &mut diag);
    if out.flush().is_err() {
        return ExitCode::from(zetafam_cli::EXIT_USAGE);
    }
    ExitCode::from(code)
}
