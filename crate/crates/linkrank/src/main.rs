fn main() {
    std::process::exit(linkrank::cli::run());
}
