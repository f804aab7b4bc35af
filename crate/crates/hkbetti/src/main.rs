fn main() {
    std::process::exit(hkbetti::cli::run_from_env());
}
