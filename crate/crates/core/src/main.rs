fn main() {
    std::process::exit(talkwalk::cli::run(std::env::args_os()));
}
