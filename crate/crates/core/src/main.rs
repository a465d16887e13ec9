fn main() {
    std::process::exit(qcopier::cli::run(std::env::args_os()));
}
