//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use crate::fplinalg::{PrimeModulus, Subspace};
use crate::grouptheory::{FiniteGroup, SubgroupLattice};

use super::CliError;
use crate::correspondence::subspace_intersection_numbers;

/// Renders a poset given node labels and the order relation. Edges are the
/// covering pairs, drawn from the smaller element upwards.
fn hasse(title: &str, labels: &[String], leq: impl Fn(usize, usize) -> bool) -> String {
    let n = labels.len();
    let less = |a: usize, b: usize| a != b && leq(a, b);
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", title.replace('"', "\\\"")).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    for a in 0..n {
        for b in 0..n {
            if less(a, b) && !(0..n).any(|c| less(a, c) && less(c, b)) {
                writeln!(out, "  n{a} -> n{b};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `G` and every intersection of maximal subgroups, labeled by order and
/// intersection number.
pub fn group_dot(group: &FiniteGroup, cap: usize) -> Result<String, CliError> {
    let lattice = SubgroupLattice::with_cap(group, cap)?;
    let report = lattice.intersection_numbers();
    let labels: Vec<String> = report
        .numbers
        .iter()
        .map(|(h, t)| format!("order {}\\nt={t}", h.order()))
        .collect();
    Ok(hasse(group.name(), &labels, |a, b| {
        report.numbers[a].0.is_subgroup_of(&report.numbers[b].0)
    }))
}

/// Every subspace of `F_p^n`, labeled by dimension, intersection number and
/// basis.
pub fn subspace_dot(n: usize, p: PrimeModulus) -> Result<String, CliError> {
    let numbers = subspace_intersection_numbers(n, p)?;
    let nodes: Vec<(&Subspace, &usize)> = numbers.iter().collect();
    let labels: Vec<String> = nodes
        .iter()
        .map(|(s, t)| format!("dim {}\\nt={t}\\n{s}", s.dim()))
        .collect();
    Ok(hasse(&format!("F_{p}^{n}"), &labels, |a, b| {
        nodes[a].0.is_subspace_of(nodes[b].0)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_has_only_covering_edges() {
        let labels: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        let dot = hasse("chain", &labels, |a, b| a <= b);
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("n1 -> n2;"));
        assert!(!dot.contains("n0 -> n2;"));
    }
}
