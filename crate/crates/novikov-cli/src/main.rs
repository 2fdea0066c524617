fn main() {
    std::process::exit(novikov_cli::run());
}
