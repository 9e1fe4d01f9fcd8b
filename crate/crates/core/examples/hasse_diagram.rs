//! Hasse diagrams in DOT. Pipe into `dot -Tsvg` to render.
//!
//! `cargo run --example hasse_diagram > q8.dot`

use qlattice::cli::dot::{group_dot, subspace_dot};
use qlattice::fplinalg::PrimeModulus;
use qlattice::grouptheory::{quaternion8, DEFAULT_ORDER_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", group_dot(&quaternion8()?, DEFAULT_ORDER_CAP)?);
    print!("{}", subspace_dot(2, PrimeModulus::new(3)?)?);
    Ok(())
}
