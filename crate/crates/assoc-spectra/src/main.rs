fn main() {
    std::process::exit(assoc_spectra::cli::run(std::env::args()));
}
