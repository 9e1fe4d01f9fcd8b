//! Runs the full correspondence check over the built-in group corpus and
//! over small subspace lattices, through the same entry point as the
//! `verify-corpus` subcommand.
//!
//! `cargo run --release --example verify_corpus`

fn main() -> std::process::ExitCode {
    let outcome = qlattice::cli::run(["qlattice", "verify-corpus"], false);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::ExitCode::from(outcome.code as u8)
}
