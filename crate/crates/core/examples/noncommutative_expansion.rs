//! Expanding (x + y)^n when yx = q^{-1} xy, that is xy = q yx.
//!
//! Every word in x and y is pushed into the form y^a x^b. Each swap of an
//! adjacent `xy` contributes a factor q, so the coefficient of y^a x^b is the
//! Gaussian binomial [n a]_q.
//!
//! `cargo run --example noncommutative_expansion -- 4`

use qlattice::qexact::{gauss_binom_poly, noncomm_expand};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(4), |a| a.parse())?;
    let terms = noncomm_expand(n)?;
    println!("(x + y)^{n} =");
    for term in &terms {
        let expected = gauss_binom_poly(n, term.y_degree);
        let mark = if term.coefficient == expected {
            "ok"
        } else {
            "MISMATCH"
        };
        println!(
            "  ({}) {}    [{}]",
            term.coefficient,
            term.canonical_monomial(),
            mark
        );
    }
    Ok(())
}
