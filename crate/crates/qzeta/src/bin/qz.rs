fn main() {
    std::process::exit(qzeta::cli::main_with(std::env::args_os()));
}
