fn main() {
    std::process::exit(lineup::cli::run());
}
