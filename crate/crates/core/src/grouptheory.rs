//! Finite groups given by Cayley tables, and their subgroup lattices.
//!
//! Elements are ids `0..N`. A [`Subgroup`] is a dense membership vector over
//! its parent's ids; it does not hold a reference to the parent, so every
//! operation that needs the product takes the [`FiniteGroup`] explicitly.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::fplinalg::{is_prime, PrimeModulus};

/// Default bound on `|G|` for lattice computations.
pub const DEFAULT_ORDER_CAP: usize = 256;

/// Hard ceiling for any constructed group and for cap overrides.
pub const MAX_ORDER_CAP: usize = 1024;

/// Tables up to this order get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

/// Sampled triples for larger tables.
pub const ASSOCIATIVITY_SAMPLES: usize = 10_000;

const ASSOCIATIVITY_SEED: u64 = 0x05ee_d0fa_550c;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty Cayley table")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry {value} at ({row}, {col}) is not an element id below {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no identity element")]
    NoIdentity,
    #[error("no inverse for element {0}")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("cap {0} exceeds the hard limit {MAX_ORDER_CAP}")]
    CapTooLarge(usize),
    #[error("element id {id} out of range for a group of order {order}")]
    InvalidElement { id: usize, order: usize },
    #[error("the trivial group has no maximal subgroups")]
    TrivialGroup,
    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("invalid builder argument: {0}")]
    BadArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A validated group of order `N` on element ids `0..N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Display label for an element; ids unless the builder supplied names.
    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .tuple_combinations()
            .all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.elements().map(|x| x == self.identity).collect())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(vec![true; self.order])
    }

    /// Checks closure and returns the subgroup with exactly these elements.
    pub fn subgroup_from_elements(&self, ids: &[usize]) -> Result<Subgroup, GroupError> {
        self.check_ids(ids)?;
        let mut members = vec![false; self.order];
        for &id in ids {
            members[id] = true;
        }
        let candidate = Subgroup::from_members(members);
        let closed = candidate.contains(self.identity)
            && candidate.elements().all(|a| {
                candidate.contains(self.inv(a))
                    && candidate
                        .elements()
                        .all(|b| candidate.contains(self.mul(a, b)))
            });
        if closed {
            Ok(candidate)
        } else {
            Err(GroupError::NotASubgroup)
        }
    }

    pub fn is_normal(&self, subgroup: &Subgroup) -> bool {
        self.elements().all(|g| {
            subgroup
                .elements()
                .all(|n| subgroup.contains(self.mul(self.mul(g, n), self.inv(g))))
        })
    }

    fn check_ids(&self, ids: &[usize]) -> Result<(), GroupError> {
        match ids.iter().find(|&&id| id >= self.order) {
            Some(&id) => Err(GroupError::InvalidElement {
                id,
                order: self.order,
            }),
            None => Ok(()),
        }
    }

    fn relabel(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }
}

/// Validates a Cayley table (`table[a][b] = a*b`) and locates the identity and
/// inverses. Associativity is checked exhaustively up to order
/// [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`] and on [`ASSOCIATIVITY_SAMPLES`] seeded
/// random triples above that.
pub fn from_cayley_table(
    table: Vec<Vec<usize>>,
    name: impl Into<String>,
) -> Result<FiniteGroup, GroupError> {
    let order = table.len();
    if order == 0 {
        return Err(GroupError::EmptyTable);
    }
    if order > MAX_ORDER_CAP {
        return Err(GroupError::OrderCap {
            order,
            cap: MAX_ORDER_CAP,
        });
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(GroupError::NotSquare {
                row,
                len: entries.len(),
                order,
            });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(GroupError::EntryOutOfRange {
                row,
                col,
                value,
                order,
            });
        }
    }
    let flat: Vec<usize> = table.into_iter().flatten().collect();
    let at = |a: usize, b: usize| flat[a * order + b];

    let identity = (0..order)
        .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
        .ok_or(GroupError::NoIdentity)?;
    let inverse = (0..order)
        .map(|a| {
            (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let associative = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
    if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for (a, b, c) in (0..3)
            .map(|_| 0..order)
            .multi_cartesian_product()
            .map(|v| (v[0], v[1], v[2]))
        {
            if !associative(a, b, c) {
                return Err(GroupError::NotAssociative(a, b, c));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let (a, b, c) = (
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            );
            if !associative(a, b, c) {
                return Err(GroupError::NotAssociative(a, b, c));
            }
        }
    }

    Ok(FiniteGroup {
        name: name.into(),
        order,
        table: flat,
        identity,
        inverse,
        labels: (0..order).map(|i| i.to_string()).collect(),
    })
}

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::BadPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Self(images))
    }

    /// Builds a permutation from cycles over the 1-based points `1..=degree`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (&from, &to) in cycle.iter().zip(cycle.iter().cycle().skip(1)) {
                if from == 0 || from > degree || to == 0 || to > degree {
                    return Err(GroupError::BadPermutation(format!(
                        "point outside 1..={degree} in cycle {cycle:?}"
                    )));
                }
                if std::mem::replace(&mut moved[from - 1], true) {
                    return Err(GroupError::BadPermutation(format!(
                        "point {from} appears twice"
                    )));
                }
                images[from - 1] = to - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.0[point]
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    /// Cycle notation on 1-based points, fixed points omitted; `()` for the
    /// identity.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x];
            }
            out.push_str(&format!("({})", cycle.iter().join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Parses one generator written in cycle notation, e.g. `(1 2 3)(4 5)`.
/// Returns the cycles; the degree is decided by the caller.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = open.find(')').ok_or_else(|| "unclosed cycle".to_string())?;
        let points = open[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| format!("bad point {s:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses a generator file: one generator per line in cycle notation, `#`
/// comments. The degree is the largest point mentioned.
pub fn parse_permutation_generators(text: &str) -> Result<(usize, Vec<Permutation>), GroupError> {
    let mut parsed = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        let cycles = parse_cycles(line).map_err(|message| GroupError::Parse {
            line: i + 1,
            message,
        })?;
        parsed.push((i + 1, cycles));
    }
    let degree = parsed
        .iter()
        .flat_map(|(_, cycles)| cycles.iter().flatten())
        .copied()
        .max()
        .unwrap_or(0);
    let generators = parsed
        .into_iter()
        .map(|(line, cycles)| {
            Permutation::from_cycles(degree, &cycles).map_err(|e| GroupError::Parse {
                line,
                message: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((degree, generators))
}

/// Parses the Cayley-table text format: the order `N` on the first
/// non-comment line, then `N` rows of `N` whitespace-separated ids.
pub fn parse_cayley_table(text: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(GroupError::Parse {
        line: 1,
        message: "missing order line".into(),
    })?;
    let order: usize = header.parse().map_err(|_| GroupError::Parse {
        line: first,
        message: format!("expected the group order, found {header:?}"),
    })?;
    let mut table = Vec::with_capacity(order);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| GroupError::Parse {
                    line,
                    message: format!("bad element id {t:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(GroupError::Parse {
                line,
                message: format!("expected {order} entries, found {}", row.len()),
            });
        }
        table.push(row);
    }
    if table.len() != order {
        return Err(GroupError::Parse {
            line: first,
            message: format!("expected {order} rows, found {}", table.len()),
        });
    }
    Ok(table)
}

/// Enumerates the group generated by `generators` on `degree` points and
/// returns its Cayley table. Elements are numbered in lexicographic order of
/// their image lists, so the identity is element 0.
pub fn from_permutations(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::BadPermutation(format!(
            "generator {} has degree {}, expected {degree}",
            g.cycle_notation(),
            g.degree()
        )));
    }
    let cap = cap.min(MAX_ORDER_CAP);
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(GroupError::OrderCap {
                        order: seen.len(),
                        cap,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    let elements: Vec<Permutation> = seen.into_iter().sorted().collect();
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.then(b)]).collect())
        .collect();
    let labels = elements.iter().map(Permutation::cycle_notation).collect();
    let name = format!(
        "<{}>",
        generators
            .iter()
            .map(Permutation::cycle_notation)
            .join(", ")
    );
    Ok(from_cayley_table(table, name)?.relabel(labels))
}

fn check_builder_order(order: Option<usize>) -> Result<usize, GroupError> {
    match order {
        Some(order) if order <= MAX_ORDER_CAP => Ok(order),
        Some(order) => Err(GroupError::OrderCap {
            order,
            cap: MAX_ORDER_CAP,
        }),
        None => Err(GroupError::OrderCap {
            order: usize::MAX,
            cap: MAX_ORDER_CAP,
        }),
    }
}

fn table_from(order: usize, product: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..order)
        .map(|a| (0..order).map(|b| product(a, b)).collect())
        .collect()
}

/// Cyclic group `C(m)` of order `m`, generated by element 1.
pub fn cyclic(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::BadArgument(
            "cyclic order must be at least 1".into(),
        ));
    }
    let m = check_builder_order(Some(m))?;
    from_cayley_table(table_from(m, |a, b| (a + b) % m), format!("C({m})"))
}

/// `G x H`; element `(g, h)` has id `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (m, n) = (g.order(), h.order());
    let order = check_builder_order(m.checked_mul(n))?;
    let table = table_from(order, |a, b| g.mul(a / n, b / n) * n + h.mul(a % n, b % n));
    let labels = (0..order)
        .map(|x| format!("({},{})", g.label(x / n), h.label(x % n)))
        .collect();
    Ok(from_cayley_table(table, format!("{}x{}", g.name(), h.name()))?.relabel(labels))
}

/// `(Z/p)^n` with componentwise addition. Element ids are base-`p` numerals,
/// first coordinate most significant.
pub fn elementary_abelian(p: u64, n: usize) -> Result<FiniteGroup, GroupError> {
    let p = PrimeModulus::new(p)
        .map_err(|e| GroupError::BadArgument(e.to_string()))?
        .get() as usize;
    let order = check_builder_order(u32::try_from(n).ok().and_then(|n| p.checked_pow(n)))?;
    let digits = |mut x: usize| {
        let mut d = vec![0; n];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let table = table_from(order, |a, b| {
        digits(a)
            .iter()
            .zip(digits(b))
            .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    });
    let labels = (0..order)
        .map(|x| format!("({})", digits(x).iter().join(",")))
        .collect();
    Ok(from_cayley_table(table, format!("E({p},{n})"))?.relabel(labels))
}

/// The quaternion group `{±1, ±i, ±j, ±k}` with `i^2 = j^2 = k^2 = -1`,
/// `ij = k`, `jk = i`, `ki = j`. Ids: `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
    // Units 1, i, j, k as 0..4; unit_product[u][v] = (sign, unit) with sign
    // 1 meaning negative.
    const UNIT_PRODUCT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = table_from(8, |a, b| {
        let (sign, unit) = UNIT_PRODUCT[a / 2][b / 2];
        unit * 2 + (a % 2 + b % 2 + sign) % 2
    });
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    Ok(from_cayley_table(table, "Q8")?.relabel(labels))
}

/// Dihedral group `D(m)` of order `m` (`m` even): rotations `r^a` and
/// reflections `r^a s`, with id `a + (m/2) * b` for `r^a s^b`.
pub fn dihedral(m: usize) -> Result<FiniteGroup, GroupError> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(GroupError::BadArgument(format!(
            "dihedral order must be even and at least 2, got {m}"
        )));
    }
    let m = check_builder_order(Some(m))?;
    let h = m / 2;
    let table = table_from(m, |x, y| {
        let (a, b) = (x % h, x / h);
        let (c, d) = (y % h, y / h);
        let rotation = if b == 0 { a + c } else { a + h - c } % h;
        rotation + h * ((b + d) % 2)
    });
    let labels = (0..m)
        .map(|x| match (x % h, x / h) {
            (0, 0) => "1".to_string(),
            (a, 0) => format!("r^{a}"),
            (0, _) => "s".to_string(),
            (a, _) => format!("r^{a}s"),
        })
        .collect();
    Ok(from_cayley_table(table, format!("D({m})"))?.relabel(labels))
}

/// Upper unitriangular 3x3 matrices over `F_p`, order `p^3`.
///
/// `(a, b, c)` stands for `[[1, a, c], [0, 1, b], [0, 0, 1]]`, so
/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`. For `p = 2`
/// the construction yields the dihedral group of order 8.
pub fn heisenberg(p: u64) -> Result<FiniteGroup, GroupError> {
    let p = PrimeModulus::new(p)
        .map_err(|e| GroupError::BadArgument(e.to_string()))?
        .get() as usize;
    let order = check_builder_order(p.checked_pow(3))?;
    let split = |x: usize| (x / (p * p), x / p % p, x % p);
    let table = table_from(order, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p
    });
    let labels = (0..order)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("[{a},{b},{c}]")
        })
        .collect();
    Ok(from_cayley_table(table, format!("Heis({p})"))?.relabel(labels))
}

/// Symmetric group on `m <= 5` points, generated by `(1 2 ... m)` and `(1 2)`.
pub fn symmetric(m: usize) -> Result<FiniteGroup, GroupError> {
    if !(1..=5).contains(&m) {
        return Err(GroupError::BadArgument(format!(
            "symmetric degree must be in 1..=5, got {m}"
        )));
    }
    let generators = if m == 1 {
        Vec::new()
    } else {
        vec![
            Permutation::from_cycles(m, &[(1..=m).collect()])?,
            Permutation::from_cycles(m, &[vec![1, 2]])?,
        ]
    };
    Ok(from_permutations(m, &generators, MAX_ORDER_CAP)?.with_name(format!("S({m})")))
}

/// A subgroup as a membership vector over the parent's element ids.
///
/// Ordered by size, then by the sorted list of member ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<bool>,
    order: usize,
}

impl Subgroup {
    fn from_members(members: Vec<bool>) -> Self {
        let order = members.iter().filter(|&&m| m).count();
        Self { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.get(id).copied().unwrap_or(false)
    }

    /// Member ids in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order
            && self
                .members
                .iter()
                .zip(&other.members)
                .all(|(&a, &b)| !a || b)
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(
            self.members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a && b)
                .collect(),
        )
    }

    /// `{a, b, ...}` using the parent's labels.
    pub fn describe(&self, group: &FiniteGroup) -> String {
        format!("{{{}}}", self.elements().map(|x| group.label(x)).join(", "))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Closure of the identity under right multiplication by `generators`.
fn generated(group: &FiniteGroup, generators: &[usize]) -> Subgroup {
    let mut members = vec![false; group.order()];
    members[group.identity()] = true;
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for &g in generators {
            let y = group.mul(x, g);
            if !members[y] {
                members[y] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_members(members)
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(group: &FiniteGroup, seed: &[usize]) -> Result<Subgroup, GroupError> {
    group.check_ids(seed)?;
    Ok(generated(group, seed))
}

fn check_cap(group: &FiniteGroup, cap: usize) -> Result<(), GroupError> {
    if cap > MAX_ORDER_CAP {
        return Err(GroupError::CapTooLarge(cap));
    }
    if group.order() > cap {
        return Err(GroupError::OrderCap {
            order: group.order(),
            cap,
        });
    }
    Ok(())
}

/// Every subgroup of `group`, each once, in canonical order.
///
/// Starts from the cyclic subgroups and joins subgroups with cyclic subgroups
/// until nothing new appears; every subgroup is a join of cyclic ones.
fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut index: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut found: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut cyclic_generators = Vec::new();
    for x in group.elements() {
        let c = generated(group, &[x]);
        if !index.contains_key(&c.members) {
            index.insert(c.members.clone(), found.len());
            found.push((c, vec![x]));
            cyclic_generators.push(x);
        }
    }
    let mut frontier: VecDeque<usize> = (0..found.len()).collect();
    while let Some(i) = frontier.pop_front() {
        for &c in &cyclic_generators {
            if found[i].0.contains(c) {
                continue;
            }
            let mut generators = found[i].1.clone();
            generators.push(c);
            let joined = generated(group, &generators);
            if !index.contains_key(&joined.members) {
                index.insert(joined.members.clone(), found.len());
                found.push((joined, generators));
                frontier.push_back(found.len() - 1);
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    subgroups.sort();
    subgroups
}

/// `|G| = p^e` together with the rank `n`, where `|G / Φ(G)| = p^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PGroupData {
    pub p: PrimeModulus,
    pub exponent_of_order: u32,
    pub rank: usize,
}

/// Intersection numbers of the subgroups reachable as intersections of
/// maximal subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    /// `(subgroup, intersection number)` in canonical subgroup order.
    pub numbers: Vec<(Subgroup, usize)>,
    /// Subgroups containing `Φ(G)` that are neither `G` nor an intersection
    /// of maximal subgroups.
    pub unexpressible: Vec<Subgroup>,
}

impl IntersectionReport {
    pub fn number_of(&self, subgroup: &Subgroup) -> Option<usize> {
        self.numbers
            .binary_search_by(|(s, _)| s.cmp(subgroup))
            .ok()
            .map(|i| self.numbers[i].1)
    }

    /// Count of subgroups per intersection number.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        self.numbers.iter().fold(BTreeMap::new(), |mut h, (_, t)| {
            *h.entry(*t).or_default() += 1;
            h
        })
    }
}

/// The subgroup lattice of a group, with its maximal and Frattini subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupLattice<'g> {
    group: &'g FiniteGroup,
    subgroups: Vec<Subgroup>,
    maximal: Vec<Subgroup>,
    frattini: Subgroup,
}

impl<'g> SubgroupLattice<'g> {
    pub fn new(group: &'g FiniteGroup) -> Result<Self, GroupError> {
        Self::with_cap(group, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(group: &'g FiniteGroup, cap: usize) -> Result<Self, GroupError> {
        check_cap(group, cap)?;
        let subgroups = enumerate_subgroups(group);
        let proper = &subgroups[..subgroups.len() - 1];
        let maximal: Vec<Subgroup> = proper
            .iter()
            .filter(|h| {
                !proper
                    .iter()
                    .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
            })
            .cloned()
            .collect();
        // The empty intersection is G itself only for the trivial group,
        // where G is also the trivial subgroup.
        let frattini = maximal
            .iter()
            .fold(group.whole(), |acc, m| acc.intersect(m));
        Ok(Self {
            group,
            subgroups,
            maximal,
            frattini,
        })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn maximal_subgroups(&self) -> &[Subgroup] {
        &self.maximal
    }

    pub fn frattini(&self) -> &Subgroup {
        &self.frattini
    }

    pub fn subgroups_containing_frattini(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups
            .iter()
            .filter(|h| self.frattini.is_subgroup_of(h))
    }

    pub fn p_group_data(&self) -> Result<PGroupData, GroupError> {
        let order = self.group.order();
        let (p, e) = prime_power(order).ok_or(GroupError::NotPGroup(order))?;
        let quotient_order = order / self.frattini.order();
        let (_, rank) = if quotient_order == 1 {
            (p, 0)
        } else {
            prime_power(quotient_order).expect("quotient of a p-group")
        };
        Ok(PGroupData {
            p: PrimeModulus::new(p as u64).expect("prime divisor"),
            exponent_of_order: e,
            rank: rank as usize,
        })
    }

    /// Breadth-first labeling: level 0 is `G`, level 1 the maximal
    /// subgroups, level `t` every new `X ∩ M` with `X` at level `t - 1` and `M`
    /// maximal.
    pub fn intersection_numbers(&self) -> IntersectionReport {
        let whole = self
            .subgroups
            .last()
            .expect("at least the trivial subgroup");
        let mut seen: HashSet<&[bool]> = HashSet::from([whole.members()]);
        let mut level: Vec<&Subgroup> = vec![whole];
        let mut numbers: Vec<(Subgroup, usize)> = vec![(whole.clone(), 0)];
        let mut t = 0;
        while !level.is_empty() {
            t += 1;
            let mut next = Vec::new();
            for x in &level {
                for m in &self.maximal {
                    let y = x.intersect(m);
                    // Intersections are subgroups, so look up the lattice's own copy.
                    let i = self
                        .subgroups
                        .binary_search(&y)
                        .expect("intersection of subgroups is a subgroup");
                    let y = &self.subgroups[i];
                    if seen.insert(y.members()) {
                        next.push(y);
                    }
                }
            }
            numbers.extend(next.iter().map(|&s| (s.clone(), t)));
            level = next;
        }
        numbers.sort_by(|a, b| a.0.cmp(&b.0));
        let unexpressible = self
            .subgroups_containing_frattini()
            .filter(|h| numbers.binary_search_by(|(s, _)| s.cmp(h)).is_err())
            .cloned()
            .collect();
        IntersectionReport {
            numbers,
            unexpressible,
        }
    }

    /// Smallest generating-set size, found by growing subgroups one generator
    /// at a time. Independent of the Frattini subgroup.
    pub fn rank_by_search(&self) -> usize {
        let group = self.group;
        let target = group.whole();
        let mut level: Vec<(Subgroup, Vec<usize>)> = vec![(group.trivial_subgroup(), vec![])];
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut size = 0;
        while !level.iter().any(|(s, _)| *s == target) {
            size += 1;
            let mut next = Vec::new();
            for (s, generators) in &level {
                for x in group.elements().filter(|&x| !s.contains(x)) {
                    let mut extended = generators.clone();
                    extended.push(x);
                    let joined = generated(group, &extended);
                    if seen.insert(joined.members.clone()) {
                        next.push((joined, extended));
                    }
                }
            }
            level = next;
        }
        size
    }
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    debug_assert!(is_prime(p as u64));
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn all_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    Ok(SubgroupLattice::new(group)?.subgroups)
}

pub fn maximal_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    if group.order() == 1 {
        return Err(GroupError::TrivialGroup);
    }
    Ok(SubgroupLattice::new(group)?.maximal)
}

/// Intersection of all maximal subgroups; trivial for the trivial group.
pub fn frattini(group: &FiniteGroup) -> Result<Subgroup, GroupError> {
    Ok(SubgroupLattice::new(group)?.frattini)
}

pub fn p_group_data(group: &FiniteGroup) -> Result<PGroupData, GroupError> {
    SubgroupLattice::new(group)?.p_group_data()
}

pub fn intersection_numbers(group: &FiniteGroup) -> Result<IntersectionReport, GroupError> {
    Ok(SubgroupLattice::new(group)?.intersection_numbers())
}

pub fn is_intersection_of_maximals(
    group: &FiniteGroup,
    subgroup: &Subgroup,
) -> Result<bool, GroupError> {
    if *subgroup == group.whole() {
        return Ok(true);
    }
    Ok(intersection_numbers(group)?.number_of(subgroup).is_some())
}

/// `G / N` together with the projection from element ids to coset ids.
/// Cosets are numbered by their smallest element id.
pub fn quotient(
    group: &FiniteGroup,
    normal: &Subgroup,
) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    if normal.members().len() != group.order() {
        return Err(GroupError::NotASubgroup);
    }
    if !group.is_normal(normal) {
        return Err(GroupError::NotNormal);
    }
    const UNASSIGNED: usize = usize::MAX;
    let mut projection = vec![UNASSIGNED; group.order()];
    let mut representatives = Vec::new();
    for g in group.elements() {
        if projection[g] != UNASSIGNED {
            continue;
        }
        for n in normal.elements() {
            projection[group.mul(g, n)] = representatives.len();
        }
        representatives.push(g);
    }
    let table = representatives
        .iter()
        .map(|&a| {
            representatives
                .iter()
                .map(|&b| projection[group.mul(a, b)])
                .collect()
        })
        .collect();
    let labels = representatives
        .iter()
        .map(|&r| format!("{}N", group.label(r)))
        .collect();
    let quotient = from_cayley_table(table, format!("{}/N", group.name()))?.relabel(labels);
    Ok((quotient, projection))
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}
