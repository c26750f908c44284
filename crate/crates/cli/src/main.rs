use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use reesag_cli::args::Cli;
use reesag_cli::report::EXIT_USAGE;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    std::panic::set_hook(Box::new(|_| {}));
    let report = reesag_cli::run(&cli);
    let text = reesag_cli::render(&cli, &report);
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    ExitCode::from(report.exit_code as u8)
}
