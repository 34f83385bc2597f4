fn main() {
    std::process::exit(zeta_moments_cli::main_with(std::env::args_os()));
}
