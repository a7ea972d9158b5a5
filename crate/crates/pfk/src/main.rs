fn main() {
    std::process::exit(pfk::cli::run());
}
