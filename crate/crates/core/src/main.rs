fn main() {
    std::process::exit(isochar::cli::main_entry());
}
