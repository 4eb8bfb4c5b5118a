use clap::Parser;

fn main() {
    let cli = comgraph_cli::Cli::parse();
    std::process::exit(comgraph_cli::run(cli));
}
