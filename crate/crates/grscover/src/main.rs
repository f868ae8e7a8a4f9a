fn main() -> std::process::ExitCode {
    grscover::cli::main()
}
