use clap::error::ErrorKind;
use clap::Parser;

use frobkit_cli::commands::{self, Cli};
use frobkit_cli::report::{self, ErrorDoc};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let _ = err.print();
                std::process::exit(if err.use_stderr() { 2 } else { 0 });
            }
            // Usage errors still leave a machine-readable reason behind.
            let doc = ErrorDoc {
                schema_version: commands::SCHEMA_VERSION,
                command: "usage".into(),
                error: "usage".into(),
                reason: err.to_string(),
                witness: None,
            };
            print!("{}", report::to_json(&doc));
            eprintln!("{err}");
            std::process::exit(2);
        }
    };
    std::process::exit(commands::run(cli));
}
