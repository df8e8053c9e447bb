fn main() {
    // stdin stays unlocked: a `graph6:-` family reads it on its own
    let mut stdin = std::io::BufReader::new(std::io::stdin());
    let code = kesq::cli::run(
        std::env::args_os(),
        &mut stdin,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
