fn main() {
    std::process::exit(hurwitz_core::cli::run(std::env::args()));
}
