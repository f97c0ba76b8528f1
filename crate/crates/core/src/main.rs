fn main() {
    env_logger::init();
    std::process::exit(schurkit::cli::run(std::env::args_os()));
}
