//! Enumerating the subspaces of F_p^n and checking the counts against
//! Gaussian binomials.
//!
//! `cargo run --example subspace_lattice -- 3 3`

use qlattice::fplinalg::{all_subspaces, enumerate_subspaces, PrimeModulus};
use qlattice::qexact::{gauss_binom, gauss_sum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(3), |a| a.parse())?;
    let p = PrimeModulus::new(args.next().map_or(Ok(2), |a| a.parse())?)?;

    for k in 0..=n {
        let found = enumerate_subspaces(n, p, k)?.len();
        println!(
            "dim {k}: {found} subspaces, [{n} {k}]_{p} = {}",
            gauss_binom(n, k, p.get())?
        );
    }
    println!(
        "total {} = {}",
        all_subspaces(n, p)?.len(),
        gauss_sum(n, p.get())?
    );

    // Each subspace is stored by its reduced row echelon basis, so it
    // prints the same way no matter how it was spanned.
    if n >= 2 {
        for s in enumerate_subspaces(n, p, 1)?.iter().take(5) {
            println!("  {s}  annihilator {}", s.annihilator());
        }
    }
    Ok(())
}
