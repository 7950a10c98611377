fn main() {
    std::process::exit(bgim::cli::run(std::env::args_os()));
}
