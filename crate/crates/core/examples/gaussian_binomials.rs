//! Gaussian binomial coefficients as integers and as polynomials in q.
//!
//! `cargo run --example gaussian_binomials`

use qlattice::qexact::{congruence_check, gauss_binom, gauss_binom_poly, gauss_sum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Rows of the q-Pascal triangle at q = 2 count subspaces of F_2^n.
    for n in 0..=5 {
        let row = (0..=n)
            .map(|k| gauss_binom(n, k, 2).map(|v| v.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        println!("n={n}: {}   sum {}", row.join(" "), gauss_sum(n, 2)?);
    }

    println!();
    for (n, k) in [(3, 1), (4, 2), (5, 2)] {
        println!("[{n} {k}]_q = {}", gauss_binom_poly(n, k));
    }

    // At q = 1 the polynomial collapses to the ordinary binomial.
    println!("\n[6 3]_1 = {}", gauss_binom(6, 3, 1)?);

    // The number of all subspaces is congruent to 2^n modulo q - 1.
    let holds = (0..=10).all(|n| (2..=10).all(|q| congruence_check(n, q).unwrap()));
    println!("S(n,q) = 2^n mod (q-1) for n <= 10, 2 <= q <= 10: {holds}");
    Ok(())
}
