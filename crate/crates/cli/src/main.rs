use std::io::{self, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdin = String::new();
    if args.iter().any(|a| a == "-") {
        if let Err(e) = io::stdin().read_to_string(&mut stdin) {
            eprintln!("error: cannot read <stdin>: {e}");
            return ExitCode::from(oft_cli::EXIT_USAGE as u8);
        }
    }
    let out = oft_cli::run(&args, &stdin);
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
