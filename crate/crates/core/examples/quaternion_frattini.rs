//! The quaternion group: maximal subgroups, Frattini subgroup and
//! intersection numbers, and the full correspondence check.
//!
//! `cargo run --example quaternion_frattini`

use qlattice::correspondence::{build_chart, verify_theorem};
use qlattice::grouptheory::{quaternion8, SubgroupLattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q8 = quaternion8()?;
    let lattice = SubgroupLattice::new(&q8)?;

    println!("{q8}: {} subgroups", lattice.subgroups().len());
    for m in lattice.maximal_subgroups() {
        println!("  maximal {}", m.describe(&q8));
    }
    println!("  Frattini {}", lattice.frattini().describe(&q8));

    for (h, t) in &lattice.intersection_numbers().numbers {
        println!("  t={t}: {}", h.describe(&q8));
    }

    // Coordinates on G / Phi(G) = F_2^2.
    let chart = build_chart(&q8)?;
    for g in q8.elements() {
        println!("  {:>2} -> {}", q8.label(g), chart.coords(g));
    }

    let report = verify_theorem(&q8)?;
    for clause in &report.clauses {
        println!(
            "  {} {}",
            if clause.pass { "PASS" } else { "FAIL" },
            clause.name
        );
    }
    Ok(())
}
