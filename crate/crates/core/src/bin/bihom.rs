fn main() {
    std::process::exit(bihom::cli::main_entry());
}
