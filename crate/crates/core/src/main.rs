fn main() {
    std::process::exit(layerlab::cli::run(std::env::args_os()));
}
