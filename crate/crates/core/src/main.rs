fn main() {
    std::process::exit(invweyl::cli::run());
}
