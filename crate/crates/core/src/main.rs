fn main() {
    std::process::exit(three_circles::cli::run(std::env::args_os()));
}
