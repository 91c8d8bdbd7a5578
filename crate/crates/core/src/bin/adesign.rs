use std::process::ExitCode;

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let r = adesign::cli::run(std::env::args_os());
    let out = r.render(json);
    if r.status == adesign::cli::EXIT_USAGE {
        eprintln!("{out}");
    } else {
        println!("{out}");
    }
    ExitCode::from(r.status as u8)
}
