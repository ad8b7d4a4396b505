fn main() {
    std::process::exit(lenstau::cli::run(std::env::args_os()));
}
