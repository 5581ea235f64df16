fn main() {
    std::process::exit(simplex_grassmann::cli::main_with_args(std::env::args_os()));
}
