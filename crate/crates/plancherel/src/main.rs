fn main() {
    // behave like a normal pipeline citizen: die quietly on closed stdout
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(plancherel::cli::run(args));
}
