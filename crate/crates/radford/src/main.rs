use clap::Parser;

fn main() {
    let cli = radford::cli::Cli::parse();
    match radford::cli::execute(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(if e.is_mathematical() { 1 } else { 2 });
        }
    }
}
