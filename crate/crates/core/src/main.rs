use clap::Parser;

fn main() {
    let cli = csgin::cli::Cli::parse();
    std::process::exit(csgin::cli::run(cli));
}
