fn main() {
    std::process::exit(parajac::cli::run());
}
