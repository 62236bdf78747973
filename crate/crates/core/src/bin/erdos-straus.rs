fn main() {
    std::process::exit(erdos_straus::cli::main());
}
