fn main() {
    std::process::exit(motivic_cli::execute(std::env::args_os()));
}
