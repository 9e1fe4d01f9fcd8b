//! Loading groups from the two text formats: a Cayley table and a list of
//! permutation generators.
//!
//! `cargo run --example custom_cayley_table`

use qlattice::correspondence::verify_theorem;
use qlattice::grouptheory::{
    from_cayley_table, from_permutations, parse_cayley_table, parse_permutation_generators,
    MAX_ORDER_CAP,
};

// C(4) x C(2), element a*2 + b for a in Z/4, b in Z/2.
const TABLE: &str = "\
# order
8
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 4 5 6 7 0 1
3 2 5 4 7 6 1 0
4 5 6 7 0 1 2 3
5 4 7 6 1 0 3 2
6 7 0 1 2 3 4 5
7 6 1 0 3 2 5 4
";

// The dihedral group of the square acting on its corners.
const GENERATORS: &str = "\
(1 2 3 4)
(1 3)   # a reflection
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = from_cayley_table(parse_cayley_table(TABLE)?, "C(4)xC(2) from table")?;
    let (degree, gens) = parse_permutation_generators(GENERATORS)?;
    let square = from_permutations(degree, &gens, MAX_ORDER_CAP)?.with_name("square symmetries");

    for g in [&table, &square] {
        let report = verify_theorem(g)?;
        println!(
            "{g}: abelian={} rank={} histogram={:?} {}",
            g.is_abelian(),
            report.rank,
            report.histogram_observed,
            if report.passed() { "PASS" } else { "FAIL" }
        );
    }

    // Broken inputs are rejected with a reason.
    let bad = "2\n0 1\n1 1\n";
    println!(
        "bad table: {}",
        from_cayley_table(parse_cayley_table(bad)?, "bad").unwrap_err()
    );
    Ok(())
}
