use clap::Parser;

fn main() {
    let cli = mcub_cli::args::Cli::parse();
    let r = mcub_cli::run(&cli);
    if let Err(e) = &r {
        eprintln!("error: {e:#}");
    }
    std::process::exit(mcub_cli::exit_code(&r));
}
