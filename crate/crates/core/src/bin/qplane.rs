use clap::Parser;
use qplane::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
