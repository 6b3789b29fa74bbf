fn main() {
    std::process::exit(chern_bounds::cli::main_with_args(std::env::args_os()));
}
