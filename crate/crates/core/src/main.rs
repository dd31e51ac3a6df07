fn main() {
    std::process::exit(bzfc::cli::main());
}
