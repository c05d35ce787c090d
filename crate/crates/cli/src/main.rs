use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let outcome = seqforge_cli::run(&args);
    print!("{}", outcome.stdout);
    ExitCode::from(outcome.code)
}
