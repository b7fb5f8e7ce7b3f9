//! The `hochex` binary: parse arguments, run the command, map errors to
//! exit codes (2 for unusable input, 3 for a blown size cap).

use clap::Parser;

fn main() {
    let cli = hochex_cli::cli::Cli::parse();
    if let Err(e) = hochex_cli::cli::run(cli) {
        eprintln!("hochex: {e}");
        std::process::exit(e.exit_code());
    }
}
