fn main() {
    std::process::exit(l1_lines::cli::run());
}
