fn main() {
    ascent_patterns::cli::main()
}
