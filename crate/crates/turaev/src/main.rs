fn main() { std::process::exit(turaev::cli::main()) }
