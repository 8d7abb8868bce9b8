fn main() {
    std::process::exit(hyperxf::cli_main());
}
