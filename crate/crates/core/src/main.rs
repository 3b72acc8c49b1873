use std::io::Write;

fn main() {
    if let Err(e) = dendro::cli::init_threads() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
    let run = dendro::cli::run(std::env::args_os());
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(run.code);
}
