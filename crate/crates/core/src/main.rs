use std::io::Write;

fn main() {
    let outcome = mmbound::cli::run(std::env::args_os());
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}
