//! Drive the command line in-process and print its JSON report.
//!
//!     cargo run --release --example cli_report -- sweep --family ray --k-max 3

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["closure", "--family", "grid", "--k", "4"].map(String::from).to_vec();
    }
    let out = endtangle::cli::run_cli(std::iter::once("endtangle".to_string()).chain(args));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
