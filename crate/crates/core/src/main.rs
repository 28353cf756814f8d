fn main() { std::process::exit(srm::cli::main()) }
