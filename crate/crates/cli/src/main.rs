use std::io::{IsTerminal, Read};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let arg_refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    // Read stdin only when the invocation can actually consume it: seeded
    // runs generate their own instance, help/version never take input, and
    // an interactive terminal means nothing was piped.
    let has = |f: &str| args.iter().any(|a| a == f);
    let wants_stdin = args.len() > 1
        && !has("--seed")
        && !has("--help")
        && !has("-h")
        && !has("--version")
        && !has("-V");
    let mut stdin = String::new();
    if wants_stdin && !std::io::stdin().is_terminal() {
        let _ = std::io::stdin().read_to_string(&mut stdin);
    }
    let (code, out) = offsolve_cli::run(&arg_refs, &stdin);
    print!("{out}");
    std::process::exit(code);
}
