use std::io::{self, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = keypoly::cli::run(args, &mut out, &mut || {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map(|_| buf)
    });
    let _ = out.flush();
    ExitCode::from(code)
}
