//! Strongly and weakly outstanding elements of multiset permutations.
//!
//! For `M = {1^a_1, ..., k^a_k}` the strong generating polynomial `F_M`
//! splits into integer linear factors and the weak one `G_M` into a product
//! of `phi_{N,a}` blocks, one per letter except the largest.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::{choose, factorial, frac, rat, Integer, Rational};
use crate::poly::Polynomial;

/// Multiplicity vector `(a_1, ..., a_k)`, every entry positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultisetSpec {
    multiplicities: Vec<usize>,
}

impl MultisetSpec {
    pub fn new(multiplicities: Vec<usize>) -> Result<Self, Error> {
        if multiplicities.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        if let Some(i) = multiplicities.iter().position(|&a| a == 0) {
            return Err(Error::ZeroMultiplicity { letter: i + 1 });
        }
        Ok(Self { multiplicities })
    }

    /// The permutation case: every letter of `[k]` exactly once.
    pub fn permutation(k: usize) -> Result<Self, Error> {
        Self::new(vec![1; k])
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of distinct letters.
    pub fn k(&self) -> usize {
        self.multiplicities.len()
    }

    /// Total size `N = a_1 + ... + a_k`.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Largest multiplicity.
    pub fn max_multiplicity(&self) -> usize {
        self.multiplicities.iter().copied().max().unwrap_or(0)
    }

    /// `N! / (a_1! ... a_k!)`
    pub fn permutation_count(&self) -> Integer {
        let denom: Integer = self.multiplicities.iter().map(|&a| factorial(a)).product();
        factorial(self.total()) / denom
    }

    /// `M` with its smallest letter removed, or `None` if nothing remains.
    pub fn without_smallest(&self) -> Option<Self> {
        (self.k() > 1).then(|| Self {
            multiplicities: self.multiplicities[1..].to_vec(),
        })
    }

    /// Suffix sums `a_i + ... + a_k` for `i = 1..=k`, plus a trailing zero.
    fn tails(&self) -> Vec<usize> {
        let mut tails = vec![0; self.k() + 1];
        for i in (0..self.k()).rev() {
            tails[i] = tails[i + 1] + self.multiplicities[i];
        }
        tails
    }
}

impl std::fmt::Display for MultisetSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.multiplicities.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `F_M(x) = Σ_r f(M, r) x^r`, built from the integer linear factors
/// `C(R_i - 1, a_i) + C(R_i - 1, a_i - 1) x`, where `R_i = a_i + ... + a_k`.
pub fn strong_gf(m: &MultisetSpec) -> Polynomial {
    let tails = m.tails();
    m.multiplicities
        .iter()
        .zip(&tails)
        .map(|(&a, &remaining)| {
            let top = (remaining - 1) as u64;
            Polynomial::linear(
                rat(choose(top, a as i64)),
                rat(choose(top, a as i64 - 1)),
            )
        })
        .product()
}

/// `F_M` in its prefactored rational form
/// `(N-1)! a_k x / (a_1! ... a_k!) * Π_{i<k} (1 + a_i x / (N - (a_1 + ... + a_i)))`.
pub fn strong_gf_prefactored(m: &MultisetSpec) -> Polynomial {
    let a = m.multiplicities();
    let n = m.total();
    let denom: Integer = a.iter().map(|&ai| factorial(ai)).product();
    let lead = Rational::new(factorial(n - 1) * a[m.k() - 1], denom);
    let mut consumed = 0;
    let mut out = Polynomial::monomial(1, lead);
    for &ai in &a[..m.k() - 1] {
        consumed += ai;
        out = &out * &Polynomial::linear(Rational::one(), frac(ai, n - consumed));
    }
    out
}

/// `f(M, r)` by the first-letter recurrence
/// `f(M, r) = (C(N, a_1) - C(N-1, a_1-1)) f(M', r) + C(N-1, a_1-1) f(M', r-1)`,
/// with `M'` the multiset left after removing every 1.
pub fn strong_count_recurrence(m: &MultisetSpec, r: usize) -> Integer {
    let n = m.total() as u64;
    let a1 = m.multiplicities[0] as i64;
    let first_slot = choose(n - 1, a1 - 1);
    let elsewhere = choose(n, a1) - &first_slot;
    match m.without_smallest() {
        // The empty multiset has exactly one arrangement, with no records.
        None => {
            let rest = |s: usize| if s == 0 { Integer::one() } else { Integer::zero() };
            elsewhere * rest(r) + if r > 0 { first_slot * rest(r - 1) } else { Integer::zero() }
        }
        Some(rest) => {
            let keep = elsewhere * strong_count_recurrence(&rest, r);
            let grow = if r > 0 {
                first_slot * strong_count_recurrence(&rest, r - 1)
            } else {
                Integer::zero()
            };
            keep + grow
        }
    }
}

/// Probability generating function `P_M = F_M a_1! ... a_k! / N!`.
pub fn strong_prob_gf(m: &MultisetSpec) -> Polynomial {
    strong_gf(m).scale(&Rational::new(Integer::one(), m.permutation_count()))
}

/// Mean number of strongly outstanding elements, `Σ_i a_i / (a_i + ... + a_k)`.
pub fn strong_mean(m: &MultisetSpec) -> Rational {
    let tails = m.tails();
    m.multiplicities
        .iter()
        .zip(&tails)
        .map(|(&a, &t)| frac(a, t))
        .sum()
}

/// `phi_{N,a}(x) = Σ_{m=0}^{a} C(N-m-1, a-m) x^m`.
///
/// The top term for `a = N` reads `C(-1, 0)`, taken as 1.
pub fn phi(n: usize, a: usize) -> Result<Polynomial, Error> {
    if a > n {
        return Err(Error::PhiOutOfRange { n, a });
    }
    let coeffs = (0..=a)
        .map(|m| match (n - m).checked_sub(1) {
            Some(top) => rat(choose(top as u64, (a - m) as i64)),
            None => Rational::one(),
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// `G_M(x) = phi_{N,a_1} phi_{N-a_1,a_2} ... phi_{., a_{k-1}} x^{a_k}`.
pub fn weak_gf(m: &MultisetSpec) -> Polynomial {
    let tails = m.tails();
    let k = m.k();
    let blocks: Polynomial = m.multiplicities[..k - 1]
        .iter()
        .zip(&tails)
        .map(|(&a, &remaining)| phi(remaining, a).expect("a_i <= a_i + ... + a_k"))
        .product();
    blocks.mul_x_pow(m.multiplicities[k - 1])
}

/// Mean number of weakly outstanding elements, `Σ_i a_i / (a_{i+1} + ... + a_k + 1)`.
pub fn weak_mean(m: &MultisetSpec) -> Rational {
    let tails = m.tails();
    m.multiplicities
        .iter()
        .enumerate()
        .map(|(i, &a)| frac(a, tails[i + 1] + 1))
        .sum()
}

/// Excess of the weak mean over the strong mean, with the finite majorant
/// `A(A-1) Σ_{i=1}^{k} 1/(k-i+1)^2`, `A` the largest multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanGap {
    pub gap: Rational,
    pub bound: Rational,
}

/// `Σ_i a_i(a_i - 1) / ((a_{i+1} + ... + a_k + 1)(a_i + ... + a_k))`
pub fn mean_gap(m: &MultisetSpec) -> Rational {
    let tails = m.tails();
    m.multiplicities
        .iter()
        .enumerate()
        .map(|(i, &a)| frac(a * (a - 1), (tails[i + 1] + 1) * tails[i]))
        .sum()
}

pub fn mean_gap_and_bound(m: &MultisetSpec) -> MeanGap {
    let big_a = m.max_multiplicity();
    let k = m.k();
    let squares: Rational = (1..=k).map(|i| frac(1, (k - i + 1) * (k - i + 1))).sum();
    MeanGap {
        gap: weak_mean(m) - strong_mean(m),
        bound: rat(big_a * (big_a - 1)) * squares,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarrochReport {
    /// Smallest `r` maximizing `f(M, r)`.
    pub mode: usize,
    pub mean: Rational,
    /// Whether `|mode - mean| <= 1`.
    pub ok: bool,
}

pub fn darroch_check(m: &MultisetSpec) -> DarrochReport {
    let f = strong_gf(m);
    let mode = mode_of(&f);
    let mean = strong_mean(m);
    let ok = (rat(mode) - &mean).abs() <= Rational::one();
    DarrochReport { mode, mean, ok }
}

/// Smallest index of a maximal coefficient.
pub(crate) fn mode_of(p: &Polynomial) -> usize {
    let mut best = 0;
    for (r, c) in p.coeffs().iter().enumerate() {
        if *c > p.coeff(best) {
            best = r;
        }
    }
    best
}

/// `c_r^2 >= c_{r-1} c_{r+1}` for every interior index.
pub fn is_log_concave(p: &Polynomial) -> bool {
    let c = p.coeffs();
    (1..c.len().saturating_sub(1)).all(|r| &c[r] * &c[r] >= &c[r - 1] * &c[r + 1])
}

/// Mean read off a counting polynomial, `p'(1) / p(1)`.
pub fn mean_of(p: &Polynomial) -> Rational {
    let one = Rational::one();
    let total = p.eval(&one);
    if total.is_zero() {
        return Rational::zero();
    }
    p.derivative().eval(&one) / total
}
