//! Outside p-groups the correspondence breaks: S4 has trivial Frattini
//! subgroup, so every subgroup contains it, yet some subgroups are not
//! intersections of maximal subgroups.
//!
//! `cargo run --example symmetric_counterexample`

use qlattice::grouptheory::{is_intersection_of_maximals, symmetric, SubgroupLattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s4 = symmetric(4)?;
    let lattice = SubgroupLattice::new(&s4)?;
    println!(
        "{s4}: {} subgroups, {} maximal",
        lattice.subgroups().len(),
        lattice.maximal_subgroups().len()
    );
    println!("Frattini order {}", lattice.frattini().order());
    println!("p-group data: {:?}", lattice.p_group_data().err());

    let report = lattice.intersection_numbers();
    println!("not intersections of maximal subgroups:");
    for h in &report.unexpressible {
        println!("  order {}: {}", h.order(), h.describe(&s4));
    }

    let cyclic_fours = lattice
        .subgroups()
        .iter()
        .filter(|h| h.order() == 4 && h.elements().any(|g| s4.element_order(g) == 4));
    for h in cyclic_fours {
        println!(
            "cyclic {} expressible: {}",
            h.describe(&s4),
            is_intersection_of_maximals(&s4, h)?
        );
    }
    Ok(())
}
