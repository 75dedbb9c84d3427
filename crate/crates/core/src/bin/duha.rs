fn main() {
    std::process::exit(duha::cli::run(std::env::args_os()));
}
