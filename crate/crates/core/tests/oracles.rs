//! Independent brute-force oracles. None of these go through the row
//! reduction, the word rewriting or the lattice fixpoint they check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use qlattice::fplinalg::{all_vectors, enumerate_subspaces, FpVector, PrimeModulus};
use qlattice::grouptheory::{
    all_subgroups, cyclic, dihedral, direct_product, elementary_abelian, heisenberg, quaternion8,
    symmetric, FiniteGroup,
};
use qlattice::qexact::{gauss_binom, gauss_sum, noncomm_expand};

/// Span of a set of vectors as an explicit point set, grown by adding
/// multiples of each generator until nothing new appears.
fn span(p: PrimeModulus, n: usize, gens: &[FpVector]) -> BTreeSet<Vec<u32>> {
    let mut points: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0; n]]);
    for g in gens {
        let current: Vec<Vec<u32>> = points.iter().cloned().collect();
        for v in current {
            for c in 1..p.get() {
                let w = FpVector::from(v.clone()).add(p, &g.scale(p, c));
                points.insert(w.entries().to_vec());
            }
        }
    }
    points
}

/// Number of ordered k-tuples of linearly independent vectors in F_p^n.
fn ordered_independent(p: PrimeModulus, n: usize, k: usize) -> u64 {
    fn go(p: PrimeModulus, n: usize, k: usize, chosen: &mut Vec<FpVector>) -> u64 {
        if chosen.len() == k {
            return 1;
        }
        let spanned = span(p, n, chosen);
        let mut total = 0;
        for v in all_vectors(p, n) {
            if !spanned.contains(v.entries()) {
                chosen.push(v);
                total += go(p, n, k, chosen);
                chosen.pop();
            }
        }
        total
    }
    go(p, n, k, &mut Vec::new())
}

#[test]
fn subspace_counts_by_counting_bases() {
    // k-subspaces = ordered independent k-tuples in F_p^n / ordered bases of F_p^k.
    for (n, p) in [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 5)] {
        let prime = PrimeModulus::new(p).unwrap();
        for k in 0..=n {
            let count = ordered_independent(prime, n, k) / ordered_independent(prime, k, k);
            assert_eq!(
                BigInt::from(count),
                gauss_binom(n, k, p).unwrap(),
                "n={n} k={k} p={p}"
            );
            assert_eq!(
                enumerate_subspaces(n, prime, k).unwrap().len() as u64,
                count
            );
        }
    }
}

#[test]
fn enumerated_subspaces_are_distinct_point_sets() {
    for (n, p) in [(3, 2), (2, 3), (3, 3)] {
        let prime = PrimeModulus::new(p).unwrap();
        for k in 0..=n {
            let found = enumerate_subspaces(n, prime, k).unwrap();
            let sets: BTreeSet<BTreeSet<Vec<u32>>> =
                found.iter().map(|s| span(prime, n, &s.basis())).collect();
            assert_eq!(sets.len(), found.len());
            assert!(sets.iter().all(|s| s.len() == (p as usize).pow(k as u32)));
        }
    }
}

#[test]
fn known_small_values() {
    let cases: [(usize, usize, u64, u64); 6] = [
        (2, 1, 2, 3),
        (3, 1, 2, 7),
        (3, 2, 2, 7),
        (4, 2, 2, 35),
        (4, 2, 3, 130),
        (3, 1, 5, 31),
    ];
    for (n, k, q, value) in cases {
        assert_eq!(gauss_binom(n, k, q).unwrap(), BigInt::from(value));
    }
    assert_eq!(gauss_sum(2, 2).unwrap(), BigInt::from(5));
    assert_eq!(gauss_sum(4, 2).unwrap(), BigInt::from(67));
    assert_eq!(gauss_binom(3, 5, 2).unwrap(), BigInt::from(0));
}

#[test]
fn q_equal_one_gives_ordinary_binomials() {
    for n in 0..=30u64 {
        for k in 0..=n {
            assert_eq!(
                gauss_binom(n as usize, k as usize, 1).unwrap(),
                BigInt::from(num_integer::binomial(n, k))
            );
        }
    }
}

#[test]
fn expansion_matches_inversion_counts() {
    // Coefficient of y^a x^b is the sum over words with a letters y of
    // q^(number of pairs where an x precedes a y).
    for n in 0..=10usize {
        let mut expected: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for word in 0u32..(1 << n) {
            let ys = word.count_ones() as usize;
            let mut inversions = 0;
            let mut xs_seen = 0;
            for i in 0..n {
                if word >> i & 1 == 1 {
                    inversions += xs_seen;
                } else {
                    xs_seen += 1;
                }
            }
            let coeffs = expected.entry(ys).or_default();
            if coeffs.len() <= inversions {
                coeffs.resize(inversions + 1, 0);
            }
            coeffs[inversions] += 1;
        }
        let terms = noncomm_expand(n).unwrap();
        assert_eq!(terms.len(), n + 1);
        for term in terms {
            let got: Vec<u64> = term
                .coefficient
                .coefficients()
                .iter()
                .map(|c| u64::try_from(c).unwrap())
                .collect();
            assert_eq!(got, expected[&term.y_degree], "n={n} a={}", term.y_degree);
            assert_eq!(term.x_degree + term.y_degree, n);
        }
    }
}

/// Subgroups by brute force: every subset closed under multiplication.
/// Only feasible for order <= 8 or so.
fn subgroups_by_subsets(g: &FiniteGroup) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|mask| {
            let has = |x: usize| mask >> x & 1 == 1;
            has(g.identity())
                && (0..n).all(|a| !has(a) || (0..n).all(|b| !has(b) || has(g.mul(a, b))))
        })
        .count()
}

#[test]
fn subgroup_counts() {
    for g in [
        quaternion8().unwrap(),
        dihedral(8).unwrap(),
        direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap(),
        elementary_abelian(2, 3).unwrap(),
        symmetric(3).unwrap(),
        cyclic(6).unwrap(),
    ] {
        assert_eq!(
            all_subgroups(&g).unwrap().len(),
            subgroups_by_subsets(&g),
            "{g}"
        );
    }
    // Known counts for larger groups.
    assert_eq!(all_subgroups(&symmetric(4).unwrap()).unwrap().len(), 30);
    assert_eq!(
        all_subgroups(&elementary_abelian(2, 4).unwrap())
            .unwrap()
            .len(),
        67
    );
    assert_eq!(all_subgroups(&cyclic(27).unwrap()).unwrap().len(), 4);
    // Heis(3): trivial, 13 of order 3, 4 of order 9, whole group.
    assert_eq!(all_subgroups(&heisenberg(3).unwrap()).unwrap().len(), 19);
}
