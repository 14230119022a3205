fn main() {
    std::process::exit(mzvlab::cli::run(std::env::args_os()));
}
