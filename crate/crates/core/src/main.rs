use clap::Parser;

fn main() {
    let args = golay_ks::cli::Cli::parse();
    std::process::exit(golay_ks::cli::run(args));
}
