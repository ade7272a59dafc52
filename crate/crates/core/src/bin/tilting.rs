fn main() {
    std::process::exit(tilting::cli::main_with_args(std::env::args_os()));
}
