fn main() {
    std::process::exit(taylorstab::run(std::env::args_os()));
}
