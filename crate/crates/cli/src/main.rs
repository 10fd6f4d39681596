use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use streamcsp_cli::args::Cli;
use streamcsp_cli::error::EX_USAGE;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EX_USAGE as u8);
        }
    };
    let code = match streamcsp_cli::run_to(&cli, &mut std::io::stdin().lock(), &mut std::io::stdout().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("streamcsp: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
