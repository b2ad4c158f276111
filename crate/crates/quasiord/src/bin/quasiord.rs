use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let out = quasiord::cli::run(&argv);
    if !out.stdout.is_empty() {
        print!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = write!(std::io::stderr(), "{}", out.stderr);
    }
    std::process::exit(out.code);
}
