fn main() {
    std::process::exit(ratioforge::cli::run_cli(std::env::args_os()));
}
