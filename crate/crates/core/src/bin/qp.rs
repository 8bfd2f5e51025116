fn main() {
    std::process::exit(qpdeg::cli::main());
}
