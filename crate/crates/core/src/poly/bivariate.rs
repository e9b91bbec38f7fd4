use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{rat, Rational};
use crate::poly::Polynomial;

/// Sparse polynomial in `y` and `t`, keyed by `(deg_y, deg_t)`.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::term(1, 0, Rational::one())
    }

    pub fn t() -> Self {
        Self::term(0, 1, Rational::one())
    }

    /// `c * y^deg_y * t^deg_t`
    pub fn term(deg_y: usize, deg_t: usize, c: Rational) -> Self {
        let mut out = Self::zero();
        out.accumulate((deg_y, deg_t), c);
        out
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(0, 0, c)
    }

    fn accumulate(&mut self, key: (usize, usize), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg_y: usize, deg_t: usize) -> Rational {
        self.terms
            .get(&(deg_y, deg_t))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in `(deg_y, deg_t)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&k, v) in &self.terms {
            out.accumulate(k, v * c);
        }
        out
    }

    /// Drops every term whose `t`-degree exceeds `max_t`.
    pub fn truncate_t(&self, max_t: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, dt), _)| *dt <= max_t)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Product with every term of `t`-degree above `max_t` discarded.
    pub fn mul_truncated(&self, rhs: &Self, max_t: usize) -> Self {
        let mut out = Self::zero();
        for (&(ay, at), a) in &self.terms {
            for (&(by, bt), b) in &rhs.terms {
                if at + bt <= max_t {
                    out.accumulate((ay + by, at + bt), a * b);
                }
            }
        }
        out
    }

    /// Substitutes a fixed value for `t`, leaving a polynomial in `y`.
    pub fn eval_t(&self, t: &Rational) -> Polynomial {
        let deg_y = self.terms.keys().map(|(dy, _)| *dy).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); deg_y + 1];
        for (&(dy, dt), c) in &self.terms {
            coeffs[dy] += c * num_traits::pow(t.clone(), dt);
        }
        Polynomial::new(coeffs)
    }

    /// Lifts a univariate polynomial in `t`.
    pub fn from_t_polynomial(p: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.accumulate((0, i), c.clone());
        }
        out
    }

    /// `a + b*y + c*t` with integer coefficients; handy for the linear factors
    /// that appear in series identities.
    pub fn linear(a: i64, b: i64, c: i64) -> Self {
        let mut out = Self::zero();
        out.accumulate((0, 0), rat(a));
        out.accumulate((1, 0), rat(b));
        out.accumulate((0, 1), rat(c));
        out
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.accumulate(k, v.clone());
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.mul_truncated(rhs, usize::MAX)
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for BivariatePolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_terms_are_stored() {
        let p = &BivariatePolynomial::linear(1, 2, 3) - &BivariatePolynomial::linear(1, 2, 3);
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn product_of_linear_factors() {
        // (1 + y)(1 - t) = 1 + y - t - yt
        let p = &BivariatePolynomial::linear(1, 1, 0) * &BivariatePolynomial::linear(1, 0, -1);
        assert_eq!(p.coeff(0, 0), rat(1));
        assert_eq!(p.coeff(1, 0), rat(1));
        assert_eq!(p.coeff(0, 1), rat(-1));
        assert_eq!(p.coeff(1, 1), rat(-1));
        assert_eq!(p.terms().count(), 4);
    }

    #[test]
    fn truncated_product_drops_high_t() {
        let geom = BivariatePolynomial::linear(1, 0, 1);
        let sq = geom.mul_truncated(&geom, 1);
        assert_eq!(sq, BivariatePolynomial::linear(1, 0, 2));
        assert_eq!((&geom * &geom).truncate_t(1), sq);
    }

    #[test]
    fn eval_t_gives_polynomial_in_y() {
        // 1 + y - t - yt at t = 2  ->  -1 - y
        let p = &BivariatePolynomial::linear(1, 1, 0) * &BivariatePolynomial::linear(1, 0, -1);
        assert_eq!(p.eval_t(&rat(2)), Polynomial::from_integers([-1, -1]));
    }
}
