fn main() {
    std::process::exit(flanked::cli::main_from(std::env::args_os()));
}
