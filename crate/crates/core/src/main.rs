fn main() {
    std::process::exit(sagbi_walk::cli::run_command(std::env::args_os()));
}
