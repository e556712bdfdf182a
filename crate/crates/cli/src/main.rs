fn main() {
    std::process::exit(redheffer_cli::run(std::env::args_os()));
}
