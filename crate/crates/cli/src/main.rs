use clap::Parser;
use verma_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::process::exit(out.exit_code);
        }
        Err(e) => {
            eprintln!("verma: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
