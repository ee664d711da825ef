use clap::Parser;
use rankfour_cli::{run, Cli, EXIT_INPUT};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = run(&cli);
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    if !out.summary.is_empty() {
        eprintln!("{}", out.summary);
    }
    ExitCode::from(out.code as u8)
}
