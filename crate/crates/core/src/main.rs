fn main() {
    std::process::exit(bugrefer::cli::run(std::env::args_os()));
}
