use clap::Parser;
use discrepancy::cli::{run, Cli};

fn main() {
    // usage errors exit 1 (2 is reserved for non-certified results)
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    std::process::exit(run(cli));
}
