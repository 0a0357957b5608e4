fn main() {
    std::process::exit(mechcomplete::cli::main_entry(std::env::args_os()));
}
