fn main() {
    std::process::exit(binders::cli::main_with_args(std::env::args_os()));
}
