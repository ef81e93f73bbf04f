use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match <cubic_hnr::cli::Cli as clap::Parser>::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cubic_hnr::cli::run(&cli);
    print!("{}", out.text);
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, out.report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    ExitCode::from(out.exit_code as u8)
}
