fn main() {
    std::process::exit(fockqha::cli::run());
}
