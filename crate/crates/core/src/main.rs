fn main() {
    std::process::exit(prv_core::cli::main());
}
