//! The isomorphism `G/Φ(G) ≅ F_p^n` for a finite p-group, and the reports
//! that check the subgroup and subspace counting results against Gaussian
//! binomial coefficients.

use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::fplinalg::{
    self, all_subspaces, all_vectors, express_as_hyperplane_intersection,
    intersection_number_subspace, FpVector, LinalgError, PrimeModulus, Subspace,
};
use crate::grouptheory::{
    quotient, subgroup_closure, FiniteGroup, GroupError, Subgroup, SubgroupLattice,
    DEFAULT_ORDER_CAP,
};
use crate::qexact::{gauss_binom, gauss_sum, ExactInt, QError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Exact(#[from] QError),
    #[error("subgroup does not contain the Frattini subgroup")]
    MissingFrattini,
    #[error("internal error: {0}")]
    Internal(String),
}

/// Coordinates on `G/Φ(G)` making it the additive group of `F_p^n`.
#[derive(Debug, Clone)]
pub struct FrattiniChart<'g> {
    group: &'g FiniteGroup,
    p: PrimeModulus,
    rank: usize,
    frattini: Subgroup,
    quotient: FiniteGroup,
    projection: Vec<usize>,
    coset_coords: Vec<FpVector>,
    lifted_generators: Vec<usize>,
}

/// Builds the chart, choosing generators greedily in ascending id order.
pub fn build_chart(group: &FiniteGroup) -> Result<FrattiniChart<'_>, CorrespondenceError> {
    let lattice = SubgroupLattice::new(group)?;
    FrattiniChart::from_lattice(&lattice, group.elements())
}

impl<'g> FrattiniChart<'g> {
    /// Builds the chart from an already computed lattice. Generators are taken
    /// from `candidates` in order, skipping any whose coset is already spanned.
    pub fn from_lattice(
        lattice: &SubgroupLattice<'g>,
        candidates: impl IntoIterator<Item = usize>,
    ) -> Result<Self, CorrespondenceError> {
        let group = lattice.group();
        let data = lattice.p_group_data()?;
        let (p, rank) = (data.p, data.rank);
        let frattini = lattice.frattini().clone();
        let (quotient, projection) = quotient(group, &frattini)?;

        let elementary = quotient.is_abelian()
            && quotient
                .elements()
                .all(|x| x == quotient.identity() || quotient.element_order(x) == p.get() as usize);
        if !elementary {
            return Err(CorrespondenceError::Internal(format!(
                "{}/Φ is not elementary abelian",
                group.name()
            )));
        }

        let mut lifted_generators = Vec::new();
        let mut coset_generators = Vec::new();
        let mut span = quotient.trivial_subgroup();
        for g in candidates {
            if span.order() == quotient.order() {
                break;
            }
            let coset = *projection.get(g).ok_or(GroupError::InvalidElement {
                id: g,
                order: group.order(),
            })?;
            if span.contains(coset) {
                continue;
            }
            lifted_generators.push(g);
            coset_generators.push(coset);
            span = subgroup_closure(&quotient, &coset_generators)?;
        }
        if span.order() != quotient.order() || lifted_generators.len() != rank {
            return Err(CorrespondenceError::Internal(format!(
                "selected {} generators spanning {} of {} cosets, expected rank {rank}",
                lifted_generators.len(),
                span.order(),
                quotient.order()
            )));
        }

        // Coset with coordinates a is the product of generator^a_i.
        let mut coset_coords: Vec<Option<FpVector>> = vec![None; quotient.order()];
        for coords in all_vectors(p, rank) {
            let coset = coset_generators
                .iter()
                .zip(coords.entries())
                .fold(quotient.identity(), |acc, (&c, &a)| {
                    quotient.mul(acc, quotient.pow(c, a as usize))
                });
            if coset_coords[coset].replace(coords).is_some() {
                return Err(CorrespondenceError::Internal(
                    "coordinate map is not injective".into(),
                ));
            }
        }
        let coset_coords = coset_coords
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CorrespondenceError::Internal("coordinate map is not onto".into()))?;

        let chart = Self {
            group,
            p,
            rank,
            frattini,
            quotient,
            projection,
            coset_coords,
            lifted_generators,
        };
        chart.check_additive()?;
        Ok(chart)
    }

    fn check_additive(&self) -> Result<(), CorrespondenceError> {
        let q = &self.quotient;
        for a in q.elements() {
            for b in q.elements() {
                let sum = self.coset_coords[a].add(self.p, &self.coset_coords[b]);
                if self.coset_coords[q.mul(a, b)] != sum {
                    return Err(CorrespondenceError::Internal(format!(
                        "coordinates are not additive on cosets {a}, {b}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn prime(&self) -> PrimeModulus {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn frattini(&self) -> &Subgroup {
        &self.frattini
    }

    pub fn quotient(&self) -> &FiniteGroup {
        &self.quotient
    }

    /// Element ids of `G` whose images form the standard basis.
    pub fn lifted_generators(&self) -> &[usize] {
        &self.lifted_generators
    }

    /// Coordinates of a coset id of `G/Φ(G)`.
    pub fn coset_coords(&self, coset: usize) -> &FpVector {
        &self.coset_coords[coset]
    }

    /// `π(g)` in coordinates.
    pub fn coords(&self, element: usize) -> &FpVector {
        &self.coset_coords[self.projection[element]]
    }

    /// `π(H)` as a subspace of `F_p^n`; `H` must contain `Φ(G)`.
    pub fn subgroup_to_subspace(
        &self,
        subgroup: &Subgroup,
    ) -> Result<Subspace, CorrespondenceError> {
        if subgroup.members().len() != self.group.order() {
            return Err(GroupError::NotASubgroup.into());
        }
        if !self.frattini.is_subgroup_of(subgroup) {
            return Err(CorrespondenceError::MissingFrattini);
        }
        let rows: Vec<FpVector> = subgroup
            .elements()
            .map(|g| self.coords(g).clone())
            .collect();
        Ok(fplinalg::rref(self.p, self.rank, &rows)?)
    }

    /// `π^{-1}(S)`, a subgroup containing `Φ(G)`.
    pub fn subspace_to_subgroup(
        &self,
        subspace: &Subspace,
    ) -> Result<Subgroup, CorrespondenceError> {
        if subspace.prime() != self.p || subspace.ambient_dim() != self.rank {
            return Err(LinalgError::Mismatch(
                subspace.prime().get(),
                subspace.ambient_dim(),
                self.p.get(),
                self.rank,
            )
            .into());
        }
        let ids: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| subspace.contains(self.coords(g)))
            .collect();
        Ok(self.group.subgroup_from_elements(&ids)?)
    }
}

/// One checked statement in a [`TheoremReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
}

/// Observed lattice counts next to the Gaussian binomial values they should
/// equal. Histograms are keyed `0..=rank`, with zero counts kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    pub p: PrimeModulus,
    pub rank: usize,
    pub frattini_order: usize,
    pub maximal_observed: usize,
    pub maximal_expected: ExactInt,
    /// Intersection number -> count.
    pub histogram_observed: BTreeMap<usize, usize>,
    pub histogram_expected: BTreeMap<usize, ExactInt>,
    /// Dimension of the image in `F_p^n` -> count.
    pub dimension_observed: BTreeMap<usize, usize>,
    pub dimension_expected: BTreeMap<usize, ExactInt>,
    pub total_observed: usize,
    pub total_expected: ExactInt,
    pub clauses: Vec<Clause>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }
}

pub const CLAUSE_TOTAL: &str = "total_containing_frattini";
pub const CLAUSE_INTERSECTION_COUNTS: &str = "intersection_number_counts";
pub const CLAUSE_DIMENSION_COUNTS: &str = "quotient_dimension_counts";
pub const CLAUSE_NUMBER_IS_CODIMENSION: &str = "intersection_number_is_codimension";
pub const CLAUSE_DUALITY: &str = "duality";
pub const CLAUSE_MAXIMAL_COUNT: &str = "maximal_count";

fn zero_filled(rank: usize, counts: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut histogram: BTreeMap<usize, usize> = (0..=rank).map(|k| (k, 0)).collect();
    for key in counts {
        *histogram.entry(key).or_default() += 1;
    }
    histogram
}

fn matches_expected(
    observed: &BTreeMap<usize, usize>,
    expected: &BTreeMap<usize, ExactInt>,
) -> bool {
    observed.len() == expected.len()
        && observed
            .iter()
            .all(|(k, &count)| expected.get(k) == Some(&ExactInt::from(count)))
}

fn symmetric(histogram: &BTreeMap<usize, usize>, rank: usize) -> bool {
    (0..=rank).all(|k| histogram.get(&k) == histogram.get(&(rank - k)))
}

struct Expected {
    by_intersection_number: BTreeMap<usize, ExactInt>,
    by_dimension: BTreeMap<usize, ExactInt>,
    total: ExactInt,
    maximal: ExactInt,
}

fn expected_counts(rank: usize, p: PrimeModulus) -> Result<Expected, QError> {
    let p = ExactInt::from(p.get());
    let mut by_intersection_number = BTreeMap::new();
    let mut by_dimension = BTreeMap::new();
    for k in 0..=rank {
        let value = gauss_binom(rank, k, p.clone())?;
        by_intersection_number.insert(rank - k, value.clone());
        by_dimension.insert(k, value);
    }
    let maximal = if rank == 0 {
        ExactInt::from(0)
    } else {
        gauss_binom(rank, rank - 1, p.clone())?
    };
    Ok(Expected {
        by_intersection_number,
        by_dimension,
        total: gauss_sum(rank, p)?,
        maximal,
    })
}

/// Checks the subgroup counts of a p-group against `[n k]_p` and `S_{n,p}`.
pub fn verify_theorem(group: &FiniteGroup) -> Result<TheoremReport, CorrespondenceError> {
    verify_theorem_with(group, DEFAULT_ORDER_CAP, None)
}

/// As [`verify_theorem`], with an order cap and an optional generator
/// candidate order for the chart (ascending ids when `None`).
pub fn verify_theorem_with(
    group: &FiniteGroup,
    cap: usize,
    generator_order: Option<&[usize]>,
) -> Result<TheoremReport, CorrespondenceError> {
    let lattice = SubgroupLattice::with_cap(group, cap)?;
    verify_lattice(&lattice, generator_order)
}

/// [`verify_theorem`] on a lattice that is already enumerated.
pub fn verify_lattice(
    lattice: &SubgroupLattice<'_>,
    generator_order: Option<&[usize]>,
) -> Result<TheoremReport, CorrespondenceError> {
    let group = lattice.group();
    let chart = match generator_order {
        Some(order) => FrattiniChart::from_lattice(lattice, order.iter().copied())?,
        None => FrattiniChart::from_lattice(lattice, group.elements())?,
    };
    let (p, rank) = (chart.prime(), chart.rank());
    let report = lattice.intersection_numbers();
    let above_frattini: Vec<&Subgroup> = lattice.subgroups_containing_frattini().collect();
    let images = above_frattini
        .iter()
        .map(|h| chart.subgroup_to_subspace(h))
        .collect::<Result<Vec<_>, _>>()?;
    let expected = expected_counts(rank, p)?;

    let histogram_observed = zero_filled(rank, report.numbers.iter().map(|(_, t)| *t));
    let dimension_observed = zero_filled(rank, images.iter().map(Subspace::dim));
    let number_is_codimension = report.unexpressible.is_empty()
        && above_frattini
            .iter()
            .zip(&images)
            .all(|(h, image)| report.number_of(h) == Some(rank - image.dim()));
    let maximal_observed = lattice.maximal_subgroups().len();

    let clauses = vec![
        Clause {
            name: CLAUSE_TOTAL,
            pass: ExactInt::from(above_frattini.len()) == expected.total,
        },
        Clause {
            name: CLAUSE_INTERSECTION_COUNTS,
            pass: matches_expected(&histogram_observed, &expected.by_intersection_number),
        },
        Clause {
            name: CLAUSE_DIMENSION_COUNTS,
            pass: matches_expected(&dimension_observed, &expected.by_dimension),
        },
        Clause {
            name: CLAUSE_NUMBER_IS_CODIMENSION,
            pass: number_is_codimension,
        },
        Clause {
            name: CLAUSE_DUALITY,
            pass: symmetric(&histogram_observed, rank),
        },
        Clause {
            name: CLAUSE_MAXIMAL_COUNT,
            pass: ExactInt::from(maximal_observed) == expected.maximal,
        },
    ];

    Ok(TheoremReport {
        group: group.name().to_string(),
        order: group.order(),
        p,
        rank,
        frattini_order: lattice.frattini().order(),
        maximal_observed,
        maximal_expected: expected.maximal,
        histogram_observed,
        histogram_expected: expected.by_intersection_number,
        dimension_observed,
        dimension_expected: expected.by_dimension,
        total_observed: above_frattini.len(),
        total_expected: expected.total,
        clauses,
    })
}

/// Intersection numbers of subspaces found breadth-first over hyperplane
/// intersections, mirroring the group-side computation.
pub fn subspace_intersection_numbers(
    n: usize,
    p: PrimeModulus,
) -> Result<BTreeMap<Subspace, usize>, CorrespondenceError> {
    let hyperplanes: Vec<Subspace> = fplinalg::all_hyperplanes(n, p)?
        .iter()
        .map(|h| h.subspace())
        .collect();
    let full = Subspace::full(p, n);
    let mut numbers = BTreeMap::from([(full.clone(), 0)]);
    let mut level = vec![full];
    let mut t = 0;
    while !level.is_empty() {
        t += 1;
        let mut next = Vec::new();
        let mut seen_now = HashSet::new();
        for x in &level {
            for h in &hyperplanes {
                let y = x.intersect(h)?;
                if !numbers.contains_key(&y) && seen_now.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        for y in &next {
            numbers.insert(y.clone(), t);
        }
        level = next;
    }
    Ok(numbers)
}

/// Checks the subspace counts of `F_p^n` against `[n k]_p` and `S_{n,p}`.
pub fn verify_subspace_theorem(
    n: usize,
    p: PrimeModulus,
) -> Result<TheoremReport, CorrespondenceError> {
    let subspaces = all_subspaces(n, p)?;
    let numbers = subspace_intersection_numbers(n, p)?;
    let expected = expected_counts(n, p)?;

    let reachable = subspaces.iter().filter(|s| numbers.contains_key(s)).count();
    let histogram_observed = zero_filled(n, numbers.values().copied());
    let dimension_observed = zero_filled(n, subspaces.iter().map(Subspace::dim));
    let number_is_codimension = subspaces.iter().all(|s| {
        let hyperplanes = express_as_hyperplane_intersection(s);
        let rebuilt = hyperplanes
            .iter()
            .try_fold(Subspace::full(p, n), |acc, h| acc.intersect(&h.subspace()));
        numbers.get(s) == Some(&s.codim())
            && intersection_number_subspace(s) == s.codim()
            && hyperplanes.len() == s.codim()
            && rebuilt.as_ref() == Ok(s)
    });
    // Annihilators carry the k-dimensional subspaces onto the (n-k)-dimensional ones.
    let by_dim: HashMap<usize, HashSet<&Subspace>> =
        subspaces.iter().fold(HashMap::new(), |mut acc, s| {
            acc.entry(s.dim()).or_default().insert(s);
            acc
        });
    let duality = symmetric(&histogram_observed, n)
        && subspaces
            .iter()
            .all(|s| s.annihilator().annihilator() == *s)
        && (0..=n).all(|k| {
            let images: HashSet<Subspace> = by_dim
                .get(&k)
                .into_iter()
                .flatten()
                .map(|s| s.annihilator())
                .collect();
            let target = by_dim.get(&(n - k)).cloned().unwrap_or_default();
            images.len() == target.len() && images.iter().all(|s| target.contains(s))
        });
    let maximal_observed = subspaces.iter().filter(|s| s.codim() == 1).count();

    let clauses = vec![
        Clause {
            name: CLAUSE_TOTAL,
            pass: ExactInt::from(reachable) == expected.total,
        },
        Clause {
            name: CLAUSE_INTERSECTION_COUNTS,
            pass: matches_expected(&histogram_observed, &expected.by_intersection_number),
        },
        Clause {
            name: CLAUSE_DIMENSION_COUNTS,
            pass: matches_expected(&dimension_observed, &expected.by_dimension),
        },
        Clause {
            name: CLAUSE_NUMBER_IS_CODIMENSION,
            pass: number_is_codimension,
        },
        Clause {
            name: CLAUSE_DUALITY,
            pass: duality,
        },
        Clause {
            name: CLAUSE_MAXIMAL_COUNT,
            pass: ExactInt::from(maximal_observed) == expected.maximal,
        },
    ];

    Ok(TheoremReport {
        group: format!("F_{p}^{n}"),
        order: p.checked_pow(n).map_or(usize::MAX, |v| v as usize),
        p,
        rank: n,
        frattini_order: 1,
        maximal_observed,
        maximal_expected: expected.maximal,
        histogram_observed,
        histogram_expected: expected.by_intersection_number,
        dimension_observed,
        dimension_expected: expected.by_dimension,
        total_observed: reachable,
        total_expected: expected.total,
        clauses,
    })
}
