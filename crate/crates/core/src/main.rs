use std::io::Write;

fn main() {
    let outcome = lukasiewicz::cli::run_args(std::env::args_os());
    if !outcome.stdout.is_empty() {
        println!("{}", outcome.stdout.trim_end());
    }
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr.trim_end());
    }
    std::io::stdout().flush().ok();
    std::process::exit(outcome.code);
}
