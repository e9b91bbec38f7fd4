//! Outstanding elements of `n`-letter words over the alphabet `[k]`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{choose, rat, stirling_first_unsigned, stirling_second, Integer, Rational};
use crate::poly::{binomial_polynomial, BivariatePolynomial, Polynomial};

/// Word length `n` and alphabet size `k`, both positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordParams {
    n: usize,
    k: usize,
}

impl WordParams {
    pub fn new(n: usize, k: usize) -> Result<Self, Error> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidWordParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `k^n`, the number of words.
    pub fn word_count(&self) -> Integer {
        Integer::from(self.k).pow(self.n as u32)
    }
}

/// Words with exactly `distinct` different letters and `r` strict records:
/// `C(k, m) [m r] {n m}`.
pub fn strong_count_by_distinct(p: WordParams, distinct: usize, r: usize) -> Integer {
    choose(p.k as u64, distinct as i64)
        * stirling_first_unsigned(distinct, r)
        * stirling_second(p.n, distinct)
}

/// `f(n, k, r) = Σ_m C(k, m) [m r] {n m}`.
pub fn strong_count(p: WordParams, r: usize) -> Integer {
    (r.max(1)..=p.n.min(p.k))
        .map(|m| strong_count_by_distinct(p, m, r))
        .sum()
}

/// `F_k(n, x) = Σ_r f(n, k, r) x^r`.
pub fn strong_gf_words(p: WordParams) -> Polynomial {
    Polynomial::from_integers((0..=p.n.min(p.k)).map(|r| strong_count(p, r)))
}

pub fn strong_mean_words(p: WordParams) -> Rational {
    let f = strong_gf_words(p);
    f.derivative().eval(&Rational::one()) / rat(p.word_count())
}

/// `G_k(n, x) = Δ^{k-1} { x^n C(x-1, k-1) }`.
pub fn weak_gf_words(p: WordParams) -> Polynomial {
    let seed = &Polynomial::monomial(p.n, Rational::one()) * &binomial_polynomial(-1, p.k - 1);
    seed.forward_difference(p.k - 1)
}

/// `G_k(n, x)` as the alternating sum
/// `Σ_{t=0}^{k-1} (-1)^{k-1-t} (x+t)^n C(k-1, t) C(x+t-1, k-1)`.
pub fn weak_gf_words_alternating(p: WordParams) -> Polynomial {
    let k1 = p.k - 1;
    (0..=k1)
        .map(|t| {
            let sign = if (k1 - t).is_multiple_of(2) { 1 } else { -1 };
            let weight = rat(choose(k1 as u64, t as i64) * sign);
            let power = Polynomial::linear(rat(t), Rational::one()).pow(p.n as u32);
            (&power * &binomial_polynomial(t as i64 - 1, k1)).scale(&weight)
        })
        .sum()
}

/// `G_k(n, x)` from the first-letter recurrence
///
/// `G_k(n, x) = Σ_{m=0}^{n-1} Σ_{l=0}^{m} C(n-l-1, m-l) x^l G_{k-1}(n-m, x) + x^n`,
///
/// with `G_0(n, x) = 0`. Here `m` counts the 1s of the word and `l` the
/// length of its leading run of 1s.
pub fn weak_gf_words_recurrence(p: WordParams) -> Polynomial {
    WeakRecurrence::default().get(p.n, p.k)
}

#[derive(Default)]
struct WeakRecurrence {
    memo: HashMap<(usize, usize), Polynomial>,
}

impl WeakRecurrence {
    fn get(&mut self, n: usize, k: usize) -> Polynomial {
        if k == 0 {
            return Polynomial::zero();
        }
        if let Some(p) = self.memo.get(&(n, k)) {
            return p.clone();
        }
        let mut total = Polynomial::monomial(n, Rational::one());
        for m in 0..n {
            let rest = self.get(n - m, k - 1);
            if rest.is_zero() {
                continue;
            }
            // C(n-l-1, m-l) counts placements of the m-l ones after the leading run.
            let block: Polynomial = (0..=m)
                .map(|l| Polynomial::monomial(l, rat(choose((n - l - 1) as u64, (m - l) as i64))))
                .sum();
            total = &total + &(&block * &rest);
        }
        self.memo.insert((n, k), total.clone());
        total
    }
}

pub fn weak_mean_words(p: WordParams) -> Rational {
    let g = weak_gf_words(p);
    g.derivative().eval(&Rational::one()) / rat(p.word_count())
}

/// Both sides of
/// `Σ_l C(k, l) Π_{j=1}^{l} (y + (j-1)t)/(1 - jt) = Π_{j=1}^{k} (1 + y/(1 - jt))`
/// after multiplying through by `Π_{j=1}^{k} (1 - jt)`.
pub fn gauss_identity_sides(k: usize) -> (BivariatePolynomial, BivariatePolynomial) {
    let denom = |j: usize| BivariatePolynomial::linear(1, 0, -(j as i64));
    let lhs = (0..=k)
        .map(|l| {
            let rising: BivariatePolynomial = (1..=l)
                .map(|j| BivariatePolynomial::linear(0, 1, j as i64 - 1))
                .product();
            let cleared: BivariatePolynomial = (l + 1..=k).map(denom).product();
            (&rising * &cleared).scale(&rat(choose(k as u64, l as i64)))
        })
        .sum();
    let rhs = (1..=k)
        .map(|j| BivariatePolynomial::linear(1, 1, -(j as i64)))
        .product();
    (lhs, rhs)
}

/// Checks the identity above as an exact equality of polynomials in `y, t`.
pub fn gauss_identity_check(k: usize) -> bool {
    let (lhs, rhs) = gauss_identity_sides(k);
    lhs == rhs
}

/// Truncated expansion of `Π_{j=1}^{k} (1 + y/(1 - jt))` through `t^order`.
pub fn strong_bivariate_series(k: usize, order: usize) -> BivariatePolynomial {
    (1..=k).fold(BivariatePolynomial::one(), |acc, j| {
        // 1 + y Σ_{i<=order} j^i t^i
        let mut factor = BivariatePolynomial::one();
        let mut power = Integer::one();
        for i in 0..=order {
            factor = &factor + &BivariatePolynomial::term(1, i, rat(power.clone()));
            power *= j;
        }
        acc.mul_truncated(&factor, order)
    })
}

/// Compares the coefficient of `y^r t^(n-r)` in the truncated series with
/// `f(n, k, r)` for every `1 <= n <= order`.
pub fn bivariate_strong_gf_check(k: usize, order: usize) -> bool {
    let series = strong_bivariate_series(k, order);
    if series.coeff(0, 0) != Rational::one() {
        return false;
    }
    (1..=order).all(|n| {
        let p = WordParams { n, k };
        (0..=n).all(|r| series.coeff(r, n - r) == rat(strong_count(p, r)))
    })
}

/// `Σ_r f(n, k, r)`, which should be `k^n`.
pub fn strong_total(p: WordParams) -> Integer {
    (0..=p.n).map(|r| strong_count(p, r)).sum()
}

/// `true` if every coefficient of `p` is a nonnegative integer.
pub fn is_counting_polynomial(p: &Polynomial) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && *c >= Rational::zero())
}
