fn main() {
    std::process::exit(odl::cli::run());
}
