use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let code = match cyclespec::cli::parse_args(&argv) {
        Ok(cmd) => cyclespec::cli::execute(cmd),
        Err(usage) => usage.report(),
    };
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
