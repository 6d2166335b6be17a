fn main() {
    std::process::exit(oportho_cli::run(std::env::args_os()));
}
