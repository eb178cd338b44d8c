fn main() {
    std::process::exit(liestab::cli::run(std::env::args_os()));
}
