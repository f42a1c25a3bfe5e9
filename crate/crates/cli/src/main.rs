mod args;
mod commands;
mod exit;
mod report;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --jobs: {e}");
            std::process::exit(exit::USAGE);
        }
    }
    let code = match commands::dispatch(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    };
    std::process::exit(code);
}
