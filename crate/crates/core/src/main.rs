fn main() {
    std::process::exit(jdiff::cli::run(std::env::args_os()));
}
