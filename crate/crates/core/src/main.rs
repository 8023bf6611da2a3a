fn main() {
    std::process::exit(connpack::cli::cli_main(std::env::args().collect()));
}
