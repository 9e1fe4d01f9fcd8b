//! Exact arithmetic for Gaussian binomial coefficients.
//!
//! Integer values come from the product formula
//!
//! ```text
//! [n k]_q = (q^n - 1)(q^n - q)...(q^n - q^(k-1)) / (q^k - 1)(q^k - q)...(q^k - q^(k-1))
//! ```
//!
//! evaluated with exact big-integer division. Polynomial values come from the
//! q-Pascal recurrence `P(n, k) = P(n-1, k-1) + q^k P(n-1, k)`. The two routes
//! are independent and are cross-checked in the test suite. At `q = 1` the
//! product formula is `0/0`, so that case is answered by evaluating the
//! polynomial.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer used for every count in the crate.
pub type ExactInt = BigInt;

/// Largest `n` accepted by [`noncomm_expand`]; the expansion visits `2^n` words.
pub const DEFAULT_EXPANSION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("q must be an integer >= {min}, got {q}")]
    Domain { q: ExactInt, min: u32 },
    #[error("expanding (x + y)^{n} exceeds the cap n <= {cap}")]
    ExpansionCap { n: usize, cap: usize },
    #[error("internal error: product formula for [{n} {k}]_{q} left remainder {remainder}")]
    InexactDivision {
        n: usize,
        k: usize,
        q: ExactInt,
        remainder: ExactInt,
    },
}

/// Polynomial in the formal variable `q` with integer coefficients.
///
/// `coefficients()[i]` is the coefficient of `q^i`. The highest stored
/// coefficient is never zero; the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coefficients: Vec<ExactInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, ExactInt::one())
    }

    /// `coefficient * q^degree`.
    pub fn monomial(degree: usize, coefficient: ExactInt) -> Self {
        let mut coefficients = vec![ExactInt::zero(); degree];
        coefficients.push(coefficient);
        Self::from_coefficients(coefficients)
    }

    pub fn from_coefficients(mut coefficients: Vec<ExactInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[ExactInt] {
        &self.coefficients
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> ExactInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate(&self, q: &ExactInt) -> ExactInt {
        self.coefficients
            .iter()
            .rev()
            .fold(ExactInt::zero(), |acc, c| acc * q + c)
    }

    /// Multiplies by `q^by`.
    pub fn shifted(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![ExactInt::zero(); by];
        coefficients.extend(self.coefficients.iter().cloned());
        Self { coefficients }
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let coefficients = (0..len)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        QPolynomial::from_coefficients(coefficients)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        *self = &*self + rhs;
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coefficients =
            vec![ExactInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        QPolynomial::from_coefficients(coefficients)
    }
}

impl fmt::Display for QPolynomial {
    /// Ascending powers, e.g. `1 + q + 2q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match power {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{magnitude}q")?,
                _ if unit => write!(f, "q^{power}")?,
                _ => write!(f, "{magnitude}q^{power}")?,
            }
        }
        Ok(())
    }
}

fn check_q(q: &ExactInt, min: u32) -> Result<(), QError> {
    if *q < ExactInt::from(min) {
        return Err(QError::Domain { q: q.clone(), min });
    }
    Ok(())
}

/// The Gaussian binomial coefficient `[n k]_q` for an integer `q >= 1`.
///
/// Returns 1 for `k = 0` and 0 for `k > n`. For `q >= 2` the product formula
/// is divided exactly; a nonzero remainder is reported as
/// [`QError::InexactDivision`], which would indicate a bug.
pub fn gauss_binom(n: usize, k: usize, q: impl Into<ExactInt>) -> Result<ExactInt, QError> {
    let q = q.into();
    check_q(&q, 1)?;
    if k > n {
        return Ok(ExactInt::zero());
    }
    if k == 0 {
        return Ok(ExactInt::one());
    }
    if q.is_one() {
        return Ok(gauss_binom_poly(n, k).evaluate(&q));
    }
    let q_to_n: ExactInt = Pow::pow(&q, n);
    let q_to_k: ExactInt = Pow::pow(&q, k);
    let mut numerator = ExactInt::one();
    let mut denominator = ExactInt::one();
    let mut q_to_i = ExactInt::one();
    for _ in 0..k {
        numerator *= &q_to_n - &q_to_i;
        denominator *= &q_to_k - &q_to_i;
        q_to_i *= &q;
    }
    let (quotient, remainder) = numerator.div_rem(&denominator);
    if !remainder.is_zero() {
        return Err(QError::InexactDivision { n, k, q, remainder });
    }
    Ok(quotient)
}

/// `[n k]_q` as a polynomial in `q`, built from the q-Pascal recurrence.
pub fn gauss_binom_poly(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    // row[j] holds P(m, j) for the current m; entries with j > m stay zero.
    let mut row = vec![QPolynomial::zero(); k + 1];
    row[0] = QPolynomial::one();
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            row[j] = &row[j - 1] + &row[j].shifted(j);
        }
    }
    row.pop().unwrap_or_default()
}

/// `S_{n,q}`, the sum of `[n k]_q` over `k = 0..=n`.
pub fn gauss_sum(n: usize, q: impl Into<ExactInt>) -> Result<ExactInt, QError> {
    let q = q.into();
    check_q(&q, 1)?;
    (0..=n).try_fold(ExactInt::zero(), |acc, k| {
        Ok(acc + gauss_binom(n, k, q.clone())?)
    })
}

/// One collected monomial `coefficient * y^y_degree x^x_degree` of `(x + y)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncommTerm {
    pub y_degree: usize,
    pub x_degree: usize,
    pub coefficient: QPolynomial,
}

impl NoncommTerm {
    /// The monomial in rewritten order, `y^a x^b`.
    pub fn canonical_monomial(&self) -> String {
        format!("y^{} x^{}", self.y_degree, self.x_degree)
    }

    /// The same degrees written x-first, `x^b y^a`.
    pub fn x_first_monomial(&self) -> String {
        format!("x^{} y^{}", self.x_degree, self.y_degree)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Letter {
    X,
    Y,
}

/// Rewrites a word with `xy -> q yx` until every `y` precedes every `x`.
/// Returns the number of rewrites, i.e. the power of `q` picked up.
fn rewrite_to_y_first(word: &mut [Letter]) -> usize {
    let mut rewrites = 0;
    loop {
        let Some(pos) = word
            .windows(2)
            .position(|pair| pair == [Letter::X, Letter::Y])
        else {
            return rewrites;
        };
        word.swap(pos, pos + 1);
        rewrites += 1;
    }
}

/// Expands `(x + y)^n` over noncommuting `x, y` with `xy = q yx`, using the
/// default cap.
pub fn noncomm_expand(n: usize) -> Result<Vec<NoncommTerm>, QError> {
    noncomm_expand_with_cap(n, DEFAULT_EXPANSION_CAP)
}

/// Expands all `2^n` words of `(x + y)^n`, rewrites each into `y^a x^b` form
/// and collects terms. The result is ordered by x-degree from `n` down to 0.
pub fn noncomm_expand_with_cap(n: usize, cap: usize) -> Result<Vec<NoncommTerm>, QError> {
    if n > cap || n >= usize::BITS as usize {
        return Err(QError::ExpansionCap { n, cap });
    }
    let mut by_x_degree = vec![QPolynomial::zero(); n + 1];
    let mut word = vec![Letter::Y; n];
    for bits in 0usize..(1 << n) {
        for (i, letter) in word.iter_mut().enumerate() {
            *letter = if bits >> i & 1 == 1 {
                Letter::X
            } else {
                Letter::Y
            };
        }
        let x_degree = bits.count_ones() as usize;
        let power = rewrite_to_y_first(&mut word);
        by_x_degree[x_degree] += &QPolynomial::monomial(power, ExactInt::one());
    }
    Ok(by_x_degree
        .into_iter()
        .enumerate()
        .rev()
        .map(|(x_degree, coefficient)| NoncommTerm {
            y_degree: n - x_degree,
            x_degree,
            coefficient,
        })
        .collect())
}

/// Checks `S_{n,q} = 2^n (mod q - 1)` for `q >= 2`.
pub fn congruence_check(n: usize, q: impl Into<ExactInt>) -> Result<bool, QError> {
    let q = q.into();
    check_q(&q, 2)?;
    let modulus = &q - 1;
    let sum = gauss_sum(n, q)?;
    let power: ExactInt = Pow::pow(ExactInt::from(2), n);
    Ok(sum.mod_floor(&modulus) == power.mod_floor(&modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn poly(coefficients: &[i64]) -> QPolynomial {
        QPolynomial::from_coefficients(coefficients.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn known_values() {
        assert_eq!(gauss_binom(2, 1, 2).unwrap(), int(3));
        assert_eq!(gauss_binom(5, 0, 7).unwrap(), int(1));
        // brute-force subspace counts, see tests/oracles.rs
        assert_eq!(gauss_binom(3, 2, 2).unwrap(), int(7));
        assert_eq!(gauss_binom(4, 2, 2).unwrap(), int(35));
    }

    #[test]
    fn k_above_n_is_zero() {
        assert_eq!(gauss_binom(3, 4, 5).unwrap(), int(0));
        assert_eq!(gauss_binom(0, 1, 1).unwrap(), int(0));
        assert!(gauss_binom_poly(2, 3).is_zero());
    }

    #[test]
    fn q_one_gives_ordinary_binomials() {
        assert_eq!(gauss_binom(6, 3, 1).unwrap(), int(20));
        assert_eq!(gauss_sum(7, 1).unwrap(), int(128));
    }

    #[test]
    fn nonpositive_q_rejected() {
        assert_eq!(
            gauss_binom(2, 1, 0),
            Err(QError::Domain { q: int(0), min: 1 })
        );
        assert!(gauss_sum(2, -3).is_err());
        assert!(congruence_check(2, 1).is_err());
    }

    #[test]
    fn polynomial_values() {
        assert_eq!(gauss_binom_poly(2, 1), poly(&[1, 1]));
        assert_eq!(gauss_binom_poly(3, 1), poly(&[1, 1, 1]));
        assert_eq!(gauss_binom_poly(7, 7), QPolynomial::one());
        assert_eq!(gauss_binom_poly(0, 0), QPolynomial::one());
        assert_eq!(gauss_binom_poly(4, 2), poly(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn sums() {
        assert_eq!(gauss_sum(2, 2).unwrap(), int(5));
        assert_eq!(gauss_sum(0, 9).unwrap(), int(1));
        assert_eq!(gauss_sum(3, 2).unwrap(), int(16));
    }

    #[test]
    fn large_inputs_stay_exact() {
        let value = gauss_binom(40, 20, 7).unwrap();
        assert_eq!(value, gauss_binom_poly(40, 20).evaluate(&int(7)));
        assert_eq!(value, gauss_binom(40, 20, 7).unwrap());
    }

    #[test]
    fn expansion_small_cases() {
        let terms = noncomm_expand(0).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].y_degree, terms[0].x_degree), (0, 0));
        assert_eq!(terms[0].coefficient, QPolynomial::one());

        let terms = noncomm_expand(2).unwrap();
        let coefficients: Vec<_> = terms.iter().map(|t| t.coefficient.clone()).collect();
        assert_eq!(coefficients, vec![poly(&[1]), poly(&[1, 1]), poly(&[1])]);
        assert_eq!(terms[1].canonical_monomial(), "y^1 x^1");
        assert_eq!(terms[0].x_first_monomial(), "x^2 y^0");
    }

    #[test]
    fn expansion_at_two() {
        let values: Vec<_> = noncomm_expand(5)
            .unwrap()
            .iter()
            .map(|t| t.coefficient.evaluate(&int(2)))
            .collect();
        let expected: Vec<_> = [1, 31, 155, 155, 31, 1].iter().map(|&v| int(v)).collect();
        assert_eq!(values, expected);
    }

    #[test]
    fn expansion_cap() {
        assert_eq!(
            noncomm_expand(13),
            Err(QError::ExpansionCap { n: 13, cap: 12 })
        );
        assert!(noncomm_expand_with_cap(3, 2).is_err());
    }

    #[test]
    fn congruence_examples() {
        assert!(congruence_check(3, 2).unwrap());
        assert!(congruence_check(2, 3).unwrap());
        assert!(congruence_check(4, 5).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[]).to_string(), "0");
        assert_eq!(poly(&[1, 1, 1]).to_string(), "1 + q + q^2");
        assert_eq!(poly(&[0, -2, 0, 3]).to_string(), "-2q + 3q^3");
        assert_eq!(poly(&[-1, 1]).to_string(), "-1 + q");
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = poly(&[1, 1]);
        let b = poly(&[1, -1]);
        assert_eq!(&a * &b, poly(&[1, 0, -1]));
        assert_eq!(&a + &b, poly(&[2]));
        assert_eq!(&b + &poly(&[-1, 1]), QPolynomial::zero());
        assert_eq!(a.shifted(2), poly(&[0, 0, 1, 1]));
        assert_eq!(a.degree(), Some(1));
        assert_eq!(QPolynomial::zero().degree(), None);
    }
}
