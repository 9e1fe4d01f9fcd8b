//! Linear algebra over a prime field `F_p`.
//!
//! Every [`Subspace`] is stored as its reduced row echelon basis, so two values
//! compare equal exactly when they contain the same vectors. Hyperplanes are
//! stored by a normal covector scaled so its first nonzero entry is 1.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Largest `p^n` accepted by enumeration.
pub const DEFAULT_SPACE_CAP: u64 = 1 << 20;

/// Largest `p^n` accepted by [`brute_force_intersection_number`].
pub const BRUTE_FORCE_CAP: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("row {row} has length {len}, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("operands live in different spaces: F_{0}^{1} vs F_{2}^{3}")]
    Mismatch(u32, usize, u32, usize),
    #[error("space of size {p}^{n} exceeds the cap {cap}")]
    CapExceeded { p: u32, n: usize, cap: u64 },
    #[error("dimension {k} out of range for ambient dimension {n}")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("a hyperplane needs a nonzero normal covector")]
    ZeroNormal,
}

/// A prime `p`, checked by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Self(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(i64::from(self.0)) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.0)) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(self.0) - u64::from(b)) % u64::from(self.0)) as u32
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (u64::from(a) * u64::from(b) % u64::from(self.0)) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    /// Multiplicative inverse of a nonzero residue, via Fermat.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0), "zero has no inverse");
        let mut base = u64::from(a);
        let modulus = u64::from(self.0);
        let mut exp = modulus - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % modulus;
            }
            base = base * base % modulus;
            exp >>= 1;
        }
        acc as u32
    }

    /// `p^n`, or `None` on overflow.
    pub fn checked_pow(self, n: usize) -> Option<u64> {
        u64::from(self.0).checked_pow(u32::try_from(n).ok()?)
    }

    fn check_cap(self, n: usize, cap: u64) -> Result<u64, LinalgError> {
        match self.checked_pow(n) {
            Some(size) if size <= cap => Ok(size),
            _ => Err(LinalgError::CapExceeded { p: self.0, n, cap }),
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d <= p / d {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A vector of residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector(Vec<u32>);

impl FpVector {
    /// Reduces every entry modulo `p`.
    pub fn new(p: PrimeModulus, entries: impl IntoIterator<Item = i64>) -> Self {
        Self(entries.into_iter().map(|e| p.reduce(e)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The `i`-th standard basis vector of `F_p^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut entries = vec![0; n];
        entries[i] = 1;
        Self(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, p: PrimeModulus, other: &FpVector) -> FpVector {
        FpVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, p: PrimeModulus, c: u32) -> FpVector {
        FpVector(self.0.iter().map(|&a| p.mul(a, c)).collect())
    }

    /// Standard pairing `sum a_i b_i`.
    pub fn dot(&self, p: PrimeModulus, other: &FpVector) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b)))
    }
}

impl From<Vec<u32>> for FpVector {
    fn from(entries: Vec<u32>) -> Self {
        Self(entries)
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All vectors of `F_p^n` in lexicographic order.
pub fn all_vectors(p: PrimeModulus, n: usize) -> impl Iterator<Item = FpVector> {
    let mut next = Some(vec![0u32; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // Odometer with the last coordinate fastest.
        for e in succ.iter_mut().rev() {
            *e += 1;
            if *e < p.get() {
                next = Some(succ);
                break;
            }
            *e = 0;
        }
        Some(FpVector(current))
    })
}

/// Row-reduces in place and returns the nonzero rows of the reduced row
/// echelon form.
fn reduce_rows(p: PrimeModulus, n: usize, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = p.inv(rows[rank][col]);
        for e in rows[rank].iter_mut() {
            *e = p.mul(*e, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (e, &pe) in row.iter_mut().zip(&pivot_row) {
                *e = p.sub(*e, p.mul(factor, pe));
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// A subspace of `F_p^n`, stored as its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: PrimeModulus,
    ambient_dim: usize,
    basis: Vec<Vec<u32>>,
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.ambient_dim, self.dim(), &self.basis).cmp(&(
            other.p,
            other.ambient_dim,
            other.dim(),
            &other.basis,
        ))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical subspace spanned by `rows` in `F_p^n`. Idempotent on bases.
pub fn rref(p: PrimeModulus, n: usize, rows: &[FpVector]) -> Result<Subspace, LinalgError> {
    if let Some((row, v)) = rows.iter().enumerate().find(|(_, v)| v.len() != n) {
        return Err(LinalgError::Ragged {
            row,
            len: v.len(),
            expected: n,
        });
    }
    let raw = rows
        .iter()
        .map(|v| v.0.iter().map(|&e| e % p.get()).collect())
        .collect();
    Ok(Subspace {
        p,
        ambient_dim: n,
        basis: reduce_rows(p, n, raw),
    })
}

impl Subspace {
    pub fn zero(p: PrimeModulus, n: usize) -> Self {
        Self {
            p,
            ambient_dim: n,
            basis: Vec::new(),
        }
    }

    pub fn full(p: PrimeModulus, n: usize) -> Self {
        Self {
            p,
            ambient_dim: n,
            basis: (0..n).map(|i| FpVector::unit(n, i).0).collect(),
        }
    }

    pub fn prime(&self) -> PrimeModulus {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Basis rows in reduced row echelon form.
    pub fn basis(&self) -> Vec<FpVector> {
        self.basis.iter().cloned().map(FpVector).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|&e| e != 0).expect("rows are nonzero"))
            .collect()
    }

    fn check_same_space(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.p != other.p || self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::Mismatch(
                self.p.get(),
                self.ambient_dim,
                other.p.get(),
                other.ambient_dim,
            ));
        }
        Ok(())
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let p = self.p;
        let mut residual = v.0.clone();
        for (row, pivot) in self.basis.iter().zip(self.pivots()) {
            let factor = residual[pivot];
            if factor == 0 {
                continue;
            }
            for (e, &re) in residual.iter_mut().zip(row) {
                *e = p.sub(*e, p.mul(factor, re));
            }
        }
        residual.iter().all(|&e| e == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.p == other.p
            && self.ambient_dim == other.ambient_dim
            && self.basis().iter().all(|v| other.contains(v))
    }

    /// Covectors vanishing on `self`, identified with `F_p^n` by the standard
    /// pairing. Has dimension `n - dim`.
    pub fn annihilator(&self) -> Subspace {
        let p = self.p;
        let n = self.ambient_dim;
        let pivots = self.pivots();
        let rows = (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut w = vec![0; n];
                w[free] = 1;
                for (row, &pivot) in self.basis.iter().zip(&pivots) {
                    w[pivot] = p.neg(row[free]);
                }
                w
            })
            .collect();
        Subspace {
            p,
            ambient_dim: n,
            basis: reduce_rows(p, n, rows),
        }
    }

    /// `self ∩ other`, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_same_space(other)?;
        let mut rows = self.annihilator().basis;
        rows.extend(other.annihilator().basis);
        let dual_sum = Subspace {
            p: self.p,
            ambient_dim: self.ambient_dim,
            basis: reduce_rows(self.p, self.ambient_dim, rows),
        };
        Ok(dual_sum.annihilator())
    }

    /// `self + other`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_same_space(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace {
            p: self.p,
            ambient_dim: self.ambient_dim,
            basis: reduce_rows(self.p, self.ambient_dim, rows),
        })
    }

    /// All `p^dim` vectors, as linear combinations of the basis.
    pub fn vectors(&self) -> Vec<FpVector> {
        let p = self.p;
        all_vectors(p, self.dim())
            .map(|coeffs| {
                self.basis
                    .iter()
                    .zip(coeffs.entries())
                    .fold(FpVector::zero(self.ambient_dim), |acc, (row, &c)| {
                        acc.add(p, &FpVector(row.clone()).scale(p, c))
                    })
            })
            .collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.basis
                .iter()
                .map(|row| format!("({})", row.iter().join(",")))
                .join(",")
        )
    }
}

/// A linear hyperplane `{v : normal · v = 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    p: PrimeModulus,
    ambient_dim: usize,
    normal: Vec<u32>,
}

impl Hyperplane {
    /// Scales `normal` so its first nonzero entry is 1.
    pub fn new(p: PrimeModulus, normal: &FpVector) -> Result<Self, LinalgError> {
        let lead = normal
            .0
            .iter()
            .copied()
            .find(|&e| e % p.get() != 0)
            .ok_or(LinalgError::ZeroNormal)?;
        let inv = p.inv(lead % p.get());
        Ok(Self {
            p,
            ambient_dim: normal.len(),
            normal: normal.0.iter().map(|&e| p.mul(e % p.get(), inv)).collect(),
        })
    }

    pub fn normal(&self) -> FpVector {
        FpVector(self.normal.clone())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        self.normal().dot(self.p, v) == 0
    }

    pub fn subspace(&self) -> Subspace {
        Subspace {
            p: self.p,
            ambient_dim: self.ambient_dim,
            basis: vec![self.normal.clone()],
        }
        .annihilator()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ker({})", self.normal.iter().join(","))
    }
}

pub fn enumerate_subspaces(
    n: usize,
    p: PrimeModulus,
    k: usize,
) -> Result<Vec<Subspace>, LinalgError> {
    enumerate_subspaces_with_cap(n, p, k, DEFAULT_SPACE_CAP)
}

/// All `k`-dimensional subspaces of `F_p^n` in canonical order.
///
/// Generates reduced row echelon matrices directly: choose pivot columns, then
/// fill every entry right of a pivot that is not itself in a pivot column.
pub fn enumerate_subspaces_with_cap(
    n: usize,
    p: PrimeModulus,
    k: usize,
    cap: u64,
) -> Result<Vec<Subspace>, LinalgError> {
    if k > n {
        return Err(LinalgError::DimensionOutOfRange { k, n });
    }
    p.check_cap(n, cap)?;
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pivot)| {
                let pivots = &pivots;
                (pivot + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        for fill in all_vectors(p, free.len()) {
            let mut basis = vec![vec![0; n]; k];
            for (row, &pivot) in basis.iter_mut().zip(&pivots) {
                row[pivot] = 1;
            }
            for (&(i, c), &value) in free.iter().zip(fill.entries()) {
                basis[i][c] = value;
            }
            out.push(Subspace {
                p,
                ambient_dim: n,
                basis,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Every subspace of `F_p^n`, ordered by dimension then basis.
pub fn all_subspaces(n: usize, p: PrimeModulus) -> Result<Vec<Subspace>, LinalgError> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_subspaces(n, p, k)?);
    }
    Ok(out)
}

/// The `(p^n - 1)/(p - 1)` linear hyperplanes of `F_p^n`.
pub fn all_hyperplanes(n: usize, p: PrimeModulus) -> Result<Vec<Hyperplane>, LinalgError> {
    if n == 0 {
        p.check_cap(n, DEFAULT_SPACE_CAP)?;
        return Ok(Vec::new());
    }
    // A hyperplane's normal line is a 1-dimensional subspace, and its RREF
    // basis vector is already the normalized covector.
    Ok(enumerate_subspaces(n, p, 1)?
        .into_iter()
        .map(|line| Hyperplane {
            p,
            ambient_dim: n,
            normal: line.basis.into_iter().next().expect("dimension 1"),
        })
        .collect())
}

/// Writes a proper subspace as an intersection of `n - dim` distinct
/// hyperplanes by extending its basis to one of `F_p^n` and dropping one
/// added vector at a time. Returns no hyperplanes for the full space.
pub fn express_as_hyperplane_intersection(subspace: &Subspace) -> Vec<Hyperplane> {
    let p = subspace.p;
    let n = subspace.ambient_dim;
    let pivots = subspace.pivots();
    // Unit vectors on non-pivot columns complete an RREF basis.
    let added: Vec<FpVector> = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|c| FpVector::unit(n, c))
        .collect();
    (0..added.len())
        .map(|omit| {
            let rows: Vec<FpVector> = subspace
                .basis()
                .into_iter()
                .chain(
                    added
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != omit)
                        .map(|(_, v)| v.clone()),
                )
                .collect();
            let span = rref(p, n, &rows).expect("rows have length n");
            let normal = span
                .annihilator()
                .basis()
                .into_iter()
                .next()
                .expect("span has codimension 1");
            Hyperplane::new(p, &normal).expect("annihilator rows are nonzero")
        })
        .collect()
}

/// Fewest hyperplanes whose intersection is `subspace` (0 for the full space).
pub fn intersection_number_subspace(subspace: &Subspace) -> usize {
    subspace.codim()
}

/// Exhaustive search for the fewest hyperplanes whose intersection is
/// `subspace`, working with explicit point sets. Only for `p^n <= 2^12`.
pub fn brute_force_intersection_number(subspace: &Subspace) -> Result<usize, LinalgError> {
    let p = subspace.p;
    let n = subspace.ambient_dim;
    p.check_cap(n, BRUTE_FORCE_CAP)?;
    let points: Vec<FpVector> = all_vectors(p, n).collect();
    let target: Vec<bool> = {
        let members = subspace.vectors();
        points.iter().map(|v| members.contains(v)).collect()
    };
    // Normalized covectors: nonzero with leading entry 1.
    let candidates: Vec<FpVector> = points
        .iter()
        .filter(|w| w.entries().iter().find(|&&e| e != 0) == Some(&1))
        .filter(|w| subspace.basis().iter().all(|b| w.dot(p, b) == 0))
        .cloned()
        .collect();
    let zero_sets: Vec<Vec<bool>> = candidates
        .iter()
        .map(|w| points.iter().map(|v| w.dot(p, v) == 0).collect())
        .collect();
    for size in 0..=candidates.len() {
        for choice in (0..candidates.len()).combinations(size) {
            let meets =
                (0..points.len()).all(|i| choice.iter().all(|&h| zero_sets[h][i]) == target[i]);
            if meets {
                return Ok(size);
            }
        }
    }
    unreachable!("the candidate hyperplanes always cut out the subspace")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn v(p: u64, entries: &[i64]) -> FpVector {
        FpVector::new(fp(p), entries.iter().copied())
    }

    fn span(p: u64, n: usize, rows: &[&[i64]]) -> Subspace {
        let rows: Vec<_> = rows.iter().map(|r| v(p, r)).collect();
        rref(fp(p), n, &rows).unwrap()
    }

    #[test]
    fn primes() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(97).is_ok());
        assert_eq!(PrimeModulus::new(1), Err(LinalgError::NotPrime(1)));
        assert_eq!(PrimeModulus::new(9), Err(LinalgError::NotPrime(9)));
        assert_eq!(fp(7).inv(3), 5);
    }

    #[test]
    fn rref_examples() {
        let full = span(2, 2, &[&[0, 1], &[1, 0]]);
        assert_eq!(full, Subspace::full(fp(2), 2));
        assert_eq!(full.basis(), vec![v(2, &[1, 0]), v(2, &[0, 1])]);

        let line = span(5, 2, &[&[2, 4]]);
        assert_eq!(line.basis(), vec![v(5, &[1, 2])]);

        let dup = span(2, 2, &[&[1, 1], &[1, 1]]);
        assert_eq!(dup.dim(), 1);
        assert_eq!(dup.basis(), vec![v(2, &[1, 1])]);
    }

    #[test]
    fn rref_rejects_ragged() {
        let rows = [v(3, &[1, 2]), v(3, &[1])];
        assert_eq!(
            rref(fp(3), 2, &rows),
            Err(LinalgError::Ragged {
                row: 1,
                len: 1,
                expected: 2
            })
        );
    }

    #[test]
    fn enumerate_examples() {
        let lines = enumerate_subspaces(2, fp(2), 1).unwrap();
        let bases: Vec<_> = lines.iter().map(|s| s.basis()[0].clone()).collect();
        assert_eq!(bases, vec![v(2, &[0, 1]), v(2, &[1, 0]), v(2, &[1, 1])]);

        assert_eq!(
            enumerate_subspaces(3, fp(5), 0).unwrap(),
            vec![Subspace::zero(fp(5), 3)]
        );
        assert_eq!(enumerate_subspaces(3, fp(2), 1).unwrap().len(), 7);
    }

    #[test]
    fn enumerate_errors() {
        assert_eq!(
            enumerate_subspaces(2, fp(2), 3),
            Err(LinalgError::DimensionOutOfRange { k: 3, n: 2 })
        );
        assert!(matches!(
            enumerate_subspaces(21, fp(2), 1),
            Err(LinalgError::CapExceeded { .. })
        ));
        assert!(enumerate_subspaces(20, fp(2), 0).is_ok());
    }

    #[test]
    fn intersect_examples() {
        let a = span(3, 3, &[&[1, 2, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let x = span(2, 2, &[&[1, 0]]);
        let y = span(2, 2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), Subspace::zero(fp(2), 2));

        let h = Hyperplane::new(fp(3), &v(3, &[1, 1, 1]))
            .unwrap()
            .subspace();
        let k = span(3, 3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(!k.is_subspace_of(&h));
        assert_eq!(h.intersect(&k).unwrap().dim(), k.dim() - 1);

        let other = Subspace::zero(fp(2), 3);
        assert!(x.intersect(&other).is_err());
    }

    #[test]
    fn hyperplane_examples() {
        assert_eq!(all_hyperplanes(2, fp(2)).unwrap().len(), 3);
        let single = all_hyperplanes(1, fp(7)).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].subspace(), Subspace::zero(fp(7), 1));
        assert_eq!(all_hyperplanes(3, fp(3)).unwrap().len(), 13);
        assert_eq!(
            Hyperplane::new(fp(5), &v(5, &[0, 3, 1])).unwrap().normal(),
            v(5, &[0, 1, 2])
        );
        assert_eq!(
            Hyperplane::new(fp(5), &v(5, &[0, 0])),
            Err(LinalgError::ZeroNormal)
        );
    }

    #[test]
    fn hyperplane_expression_examples() {
        assert!(express_as_hyperplane_intersection(&Subspace::full(fp(3), 3)).is_empty());

        let zero = Subspace::zero(fp(2), 2);
        let hs = express_as_hyperplane_intersection(&zero);
        assert_eq!(hs.len(), 2);
        assert_ne!(hs[0], hs[1]);
        assert_eq!(hs[0].subspace().intersect(&hs[1].subspace()).unwrap(), zero);

        let s = span(2, 3, &[&[1, 1, 0]]);
        let hs = express_as_hyperplane_intersection(&s);
        assert_eq!(hs.len(), 2);
        let meet = hs[0].subspace().intersect(&hs[1].subspace()).unwrap();
        assert_eq!(meet, s);
    }

    #[test]
    fn intersection_number_examples() {
        let p = fp(2);
        assert_eq!(intersection_number_subspace(&Subspace::full(p, 3)), 0);
        for h in all_hyperplanes(3, p).unwrap() {
            assert_eq!(intersection_number_subspace(&h.subspace()), 1);
            assert_eq!(brute_force_intersection_number(&h.subspace()), Ok(1));
        }
        let zero = Subspace::zero(p, 3);
        assert_eq!(intersection_number_subspace(&zero), 3);
        assert_eq!(brute_force_intersection_number(&zero), Ok(3));
        assert!(brute_force_intersection_number(&Subspace::zero(p, 13)).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let p = fp(2);
        assert_eq!(Subspace::full(p, 2).annihilator(), Subspace::zero(p, 2));
        assert_eq!(Subspace::zero(p, 2).annihilator(), Subspace::full(p, 2));
        assert_eq!(span(2, 2, &[&[1, 0]]).annihilator(), span(2, 2, &[&[0, 1]]));
    }

    #[test]
    fn zero_dimensional_space() {
        let p = fp(3);
        assert_eq!(all_subspaces(0, p).unwrap().len(), 1);
        assert!(all_hyperplanes(0, p).unwrap().is_empty());
        assert_eq!(Subspace::zero(p, 0).vectors().len(), 1);
    }

    #[test]
    fn membership_and_vectors() {
        let s = span(3, 3, &[&[1, 2, 0]]);
        assert!(s.contains(&v(3, &[2, 1, 0])));
        assert!(!s.contains(&v(3, &[1, 0, 0])));
        assert_eq!(s.vectors().len(), 3);
        assert_eq!(s.to_string(), "[(1,2,0)]");
    }
}
