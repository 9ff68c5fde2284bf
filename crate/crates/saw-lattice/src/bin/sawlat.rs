fn main() {
    std::process::exit(saw_lattice::cli::run(std::env::args_os()));
}
