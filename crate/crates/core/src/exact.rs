//! Exact integers, rationals and the classical number sequences built on them.
//!
//! Everything in this crate is computed over [`Integer`] and [`Rational`];
//! there is no floating-point path anywhere.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Unbounded signed integer.
pub type Integer = BigInt;

/// Exact fraction, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Lifts an integer into the rationals.
pub fn rat(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn frac(num: impl Into<Integer>, den: impl Into<Integer>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Returns the integer value of `q` if it has denominator one.
pub fn as_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}

/// `n!`
pub fn factorial(n: usize) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)` for a nonnegative upper index.
///
/// Out-of-range lower indices give zero rather than an error, so callers can
/// sum over ranges that run past the support.
pub fn binomial(n: i64, k: i64) -> Result<Integer, Error> {
    if n < 0 {
        return Err(Error::NegativeBinomial { n, k });
    }
    Ok(choose(n as u64, k))
}

/// `C(n, k)` with `n` already known to be nonnegative.
pub(crate) fn choose(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Lower-triangular table grown on demand and shared between threads.
struct Triangle {
    rows: RwLock<Vec<Vec<Integer>>>,
    next_row: fn(&[Integer], usize) -> Vec<Integer>,
}

impl Triangle {
    const fn new(next_row: fn(&[Integer], usize) -> Vec<Integer>) -> Self {
        Self {
            rows: RwLock::new(Vec::new()),
            next_row,
        }
    }

    fn row(&self, n: usize) -> Vec<Integer> {
        if let Some(row) = self.rows.read().expect("stirling cache poisoned").get(n) {
            return row.clone();
        }
        let mut rows = self.rows.write().expect("stirling cache poisoned");
        if rows.is_empty() {
            rows.push(vec![Integer::one()]);
        }
        while rows.len() <= n {
            let m = rows.len();
            let row = (self.next_row)(&rows[m - 1], m);
            rows.push(row);
        }
        rows[n].clone()
    }

    fn entry(&self, n: usize, r: usize) -> Integer {
        if r > n {
            return Integer::zero();
        }
        if let Some(row) = self.rows.read().expect("stirling cache poisoned").get(n) {
            return row[r].clone();
        }
        self.row(n)[r].clone()
    }
}

// [n r] = (n-1)[n-1 r] + [n-1 r-1]
fn next_first_kind(prev: &[Integer], n: usize) -> Vec<Integer> {
    (0..=n)
        .map(|r| {
            let keep = prev.get(r).map_or_else(Integer::zero, |c| c * (n - 1));
            let grow = if r > 0 { prev[r - 1].clone() } else { Integer::zero() };
            keep + grow
        })
        .collect()
}

// {n m} = m{n-1 m} + {n-1 m-1}
fn next_second_kind(prev: &[Integer], n: usize) -> Vec<Integer> {
    (0..=n)
        .map(|m| {
            let keep = prev.get(m).map_or_else(Integer::zero, |c| c * m);
            let grow = if m > 0 { prev[m - 1].clone() } else { Integer::zero() };
            keep + grow
        })
        .collect()
}

fn first_kind() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| Triangle::new(next_first_kind))
}

fn second_kind() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| Triangle::new(next_second_kind))
}

/// Unsigned Stirling number of the first kind: the coefficient of `x^r` in
/// the rising factorial `x(x+1)...(x+n-1)`.
pub fn stirling_first_unsigned(n: usize, r: usize) -> Integer {
    first_kind().entry(n, r)
}

/// Row `n` of the unsigned first-kind triangle, indexed by `r = 0..=n`.
pub fn stirling_first_row(n: usize) -> Vec<Integer> {
    first_kind().row(n)
}

/// Stirling number of the second kind: partitions of an `n`-set into `m`
/// nonempty blocks.
pub fn stirling_second(n: usize, m: usize) -> Integer {
    second_kind().entry(n, m)
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, i| acc + frac(1, i))
}
