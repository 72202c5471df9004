fn main() {
    std::process::exit(infconv::cli::run_from(std::env::args_os()));
}
