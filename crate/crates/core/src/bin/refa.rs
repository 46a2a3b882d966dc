fn main() {
    std::process::exit(refa::cli::run(std::env::args_os()));
}
