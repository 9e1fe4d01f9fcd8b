//! Every subspace of codimension t is an intersection of exactly t
//! hyperplanes, and no fewer.
//!
//! `cargo run --example hyperplane_intersections`

use qlattice::fplinalg::{
    all_subspaces, brute_force_intersection_number, express_as_hyperplane_intersection, rref,
    FpVector, PrimeModulus,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = PrimeModulus::new(3)?;
    let line = rref(p, 3, &[FpVector::new(p, [1, 2, 0])])?;
    let planes = express_as_hyperplane_intersection(&line);
    println!(
        "{line} = {}",
        planes
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>()
            .join(" & ")
    );

    // Minimality, checked by trying every smaller set of hyperplanes.
    for (n, p) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let p = PrimeModulus::new(p)?;
        let mut all_minimal = true;
        for s in all_subspaces(n, p)? {
            let constructive = express_as_hyperplane_intersection(&s).len();
            all_minimal &=
                constructive == s.codim() && brute_force_intersection_number(&s)? == s.codim();
        }
        println!("F_{p}^{n}: constructive count equals minimum for every subspace: {all_minimal}");
    }
    Ok(())
}
