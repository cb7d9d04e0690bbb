fn main() -> std::process::ExitCode {
    fplwb_cli::main_with_args(std::env::args_os())
}
