fn main() -> std::process::ExitCode {
    coverlattice::cli::main()
}
