fn main() {
    std::process::exit(dhatu::cli::main());
}
