fn main() {
    std::process::exit(sigrank::cli::run(std::env::args_os()));
}
