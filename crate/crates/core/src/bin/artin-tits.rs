fn main() {
    std::process::exit(artin_tits::cli::main_exit_code());
}
