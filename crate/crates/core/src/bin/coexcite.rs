fn main() {
    std::process::exit(coexcitation::cli::run(std::env::args_os()));
}
