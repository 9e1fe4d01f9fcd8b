//! Rank 1 versus rank 2. A cyclic p-group has one maximal subgroup and a
//! two-step lattice above its Frattini subgroup; a rank-2 group has p + 1
//! maximal subgroups whose pairwise intersection is the Frattini subgroup.
//!
//! `cargo run --example rank_dichotomy`

use qlattice::grouptheory::{
    cyclic, dihedral, direct_product, heisenberg, quaternion8, SubgroupLattice,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let groups = [
        cyclic(8)?,
        cyclic(27)?,
        quaternion8()?,
        dihedral(8)?,
        direct_product(&cyclic(9)?, &cyclic(3)?)?,
        heisenberg(3)?,
    ];
    for g in &groups {
        let lattice = SubgroupLattice::new(g)?;
        let data = lattice.p_group_data()?;
        println!(
            "{:<10} p={} rank={} (by search {}) maximal={} histogram={:?}",
            g.name(),
            data.p,
            data.rank,
            lattice.rank_by_search(),
            lattice.maximal_subgroups().len(),
            lattice.intersection_numbers().histogram()
        );
    }
    Ok(())
}
