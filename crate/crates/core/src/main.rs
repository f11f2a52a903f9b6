use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let code = floerkit::cli::run(&args, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    std::process::exit(code);
}
