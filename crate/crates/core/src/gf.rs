//! Generating functions of the form `P(x) / (1 - x)^r`.
//!
//! This class is closed under the five template operators, and its
//! coefficients can be read off exactly with a single binomial sum.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exact::{choose, Rational};
use crate::poly::Polynomial;

/// `numerator / (1 - x)^pole_order`, kept canonical: while the pole order is
/// positive, `(1 - x)` does not divide a nonzero numerator. The zero form is
/// `0 / (1 - x)^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeomForm {
    numerator: Polynomial,
    pole_order: usize,
}

impl GeomForm {
    pub fn new(numerator: Polynomial, pole_order: usize) -> Self {
        let mut form = Self {
            numerator,
            pole_order,
        };
        form.canonicalize();
        form
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.pole_order = 0;
            return;
        }
        while self.pole_order > 0 {
            match self.numerator.div_one_minus_x() {
                Some(q) => {
                    self.numerator = q;
                    self.pole_order -= 1;
                }
                None => break,
            }
        }
    }

    pub fn zero() -> Self {
        Self::new(Polynomial::zero(), 0)
    }

    /// A plain polynomial, with no pole.
    pub fn polynomial(p: Polynomial) -> Self {
        Self::new(p, 0)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Numerator rewritten over `(1 - x)^order`; `order` must be at least the
    /// current pole order.
    fn numerator_at(&self, order: usize) -> Polynomial {
        let lift = Polynomial::from_integers([1, -1]).pow((order - self.pole_order) as u32);
        &self.numerator * &lift
    }

    /// Multiplies by `x`.
    pub fn mul_x(&self) -> Self {
        Self::new(self.numerator.mul_x_pow(1), self.pole_order)
    }

    /// Divides by `1 - x`.
    pub fn div_one_minus_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.numerator.clone(), self.pole_order + 1)
    }

    /// `x d/dx`: from `P/(1-x)^r` to `(x P'(1-x) + r x P) / (1-x)^(r+1)`.
    pub fn x_derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = &self.numerator;
        let one_minus_x = Polynomial::from_integers([1, -1]);
        let r = Rational::from_integer(self.pole_order.into());
        let top = &(&p.derivative() * &one_minus_x) + &p.scale(&r);
        Self::new(top.mul_x_pow(1), self.pole_order + 1)
    }

    /// Coefficient of `x^k`, via
    /// `[x^k] Σ_j a_j x^j / (1-x)^r = Σ_j a_j C(r + k - j - 1, r - 1)`.
    pub fn coeff(&self, k: usize) -> Rational {
        let r = self.pole_order;
        if r == 0 {
            return self.numerator.coeff(k);
        }
        self.numerator
            .coeffs()
            .iter()
            .enumerate()
            .take_while(|(j, _)| *j <= k)
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| a * Rational::from_integer(choose((r + k - j - 1) as u64, (r - 1) as i64)))
            .sum()
    }

    /// The first `len` power-series coefficients, by repeated partial sums of
    /// the numerator. Independent of [`GeomForm::coeff`].
    pub fn series(&self, len: usize) -> Vec<Rational> {
        let mut s: Vec<Rational> = (0..len).map(|i| self.numerator.coeff(i)).collect();
        for _ in 0..self.pole_order {
            let mut acc = Rational::zero();
            for c in s.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        s
    }
}

/// Generating function of the empty template, `1 / (1 - x)`.
pub fn geom_empty() -> GeomForm {
    GeomForm::new(Polynomial::one(), 1)
}

/// `x F / (1 - x)`
pub fn omega_strong(f: &GeomForm) -> GeomForm {
    f.mul_x().div_one_minus_x()
}

/// `F / (1 - x)`
pub fn omega_weak(f: &GeomForm) -> GeomForm {
    f.div_one_minus_x()
}

/// `x dF/dx`
pub fn omega_any(f: &GeomForm) -> GeomForm {
    f.x_derivative()
}

/// `(x d/dx - x/(1-x)) F`
pub fn omega_not_strong(f: &GeomForm) -> GeomForm {
    &f.x_derivative() - &omega_strong(f)
}

/// `(x d/dx - 1/(1-x)) F`
pub fn omega_not_outstanding(f: &GeomForm) -> GeomForm {
    &f.x_derivative() - &omega_weak(f)
}

/// Free-function form of [`GeomForm::coeff`].
pub fn geom_coeff(f: &GeomForm, k: usize) -> Rational {
    f.coeff(k)
}

impl Add for &GeomForm {
    type Output = GeomForm;

    fn add(self, rhs: &GeomForm) -> GeomForm {
        let order = self.pole_order.max(rhs.pole_order);
        GeomForm::new(&self.numerator_at(order) + &rhs.numerator_at(order), order)
    }
}

impl Neg for &GeomForm {
    type Output = GeomForm;

    fn neg(self) -> GeomForm {
        GeomForm {
            numerator: -&self.numerator,
            pole_order: self.pole_order,
        }
    }
}

impl Sub for &GeomForm {
    type Output = GeomForm;

    fn sub(self, rhs: &GeomForm) -> GeomForm {
        self + &(-rhs)
    }
}

impl fmt::Display for GeomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pole_order {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({})/(1 - x)", self.numerator),
            r => write!(f, "({})/(1 - x)^{r}", self.numerator),
        }
    }
}

impl Default for GeomForm {
    fn default() -> Self {
        Self::zero()
    }
}
