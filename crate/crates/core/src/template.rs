//! Positional templates over outstanding-element predicates.
//!
//! Permutation templates use `Y` (outstanding), `N` (not outstanding) and
//! `*` (free), and constrain a prefix of an arbitrary longer permutation.
//! Word templates use `S`, `W`, `*`, `s` (not strongly outstanding) and `o`
//! (not outstanding at all) and describe words of exactly their own length.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::{as_integer, factorial, frac, Integer, Rational};
use crate::gf::{
    geom_empty, omega_any, omega_not_outstanding, omega_not_strong, omega_strong, omega_weak,
    GeomForm,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermLetter {
    Yes,
    No,
    Any,
}

impl PermLetter {
    pub const ALL: [PermLetter; 3] = [PermLetter::Yes, PermLetter::No, PermLetter::Any];

    pub fn symbol(self) -> char {
        match self {
            PermLetter::Yes => 'Y',
            PermLetter::No => 'N',
            PermLetter::Any => '*',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordLetter {
    Strong,
    Weak,
    Any,
    NotStrong,
    NotOutstanding,
}

impl WordLetter {
    pub const ALL: [WordLetter; 5] = [
        WordLetter::Strong,
        WordLetter::Weak,
        WordLetter::Any,
        WordLetter::NotStrong,
        WordLetter::NotOutstanding,
    ];

    pub fn symbol(self) -> char {
        match self {
            WordLetter::Strong => 'S',
            WordLetter::Weak => 'W',
            WordLetter::Any => '*',
            WordLetter::NotStrong => 's',
            WordLetter::NotOutstanding => 'o',
        }
    }

    /// Applies the one-letter extension operator for this letter.
    pub fn apply(self, f: &GeomForm) -> GeomForm {
        match self {
            WordLetter::Strong => omega_strong(f),
            WordLetter::Weak => omega_weak(f),
            WordLetter::Any => omega_any(f),
            WordLetter::NotStrong => omega_not_strong(f),
            WordLetter::NotOutstanding => omega_not_outstanding(f),
        }
    }
}

/// Nonempty sequence over `{Y, N, *}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermTemplate {
    letters: Vec<PermLetter>,
}

impl PermTemplate {
    pub fn new(letters: Vec<PermLetter>) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::EmptyTemplate);
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[PermLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromStr for PermTemplate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'Y' => Ok(PermLetter::Yes),
                'N' => Ok(PermLetter::No),
                '*' => Ok(PermLetter::Any),
                found => Err(Error::TemplateSyntax {
                    position: i + 1,
                    found,
                    expected: "Y, N, *",
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for PermTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

/// Nonempty sequence over `{S, W, *, s, o}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordTemplate {
    letters: Vec<WordLetter>,
}

impl WordTemplate {
    pub fn new(letters: Vec<WordLetter>) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::EmptyTemplate);
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[WordLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromStr for WordTemplate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'S' => Ok(WordLetter::Strong),
                'W' => Ok(WordLetter::Weak),
                '*' => Ok(WordLetter::Any),
                's' => Ok(WordLetter::NotStrong),
                'o' => Ok(WordLetter::NotOutstanding),
                'O' => Err(Error::UndefinedTemplateLetter { position: i + 1 }),
                found => Err(Error::TemplateSyntax {
                    position: i + 1,
                    found,
                    expected: "S, W, *, s, o",
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for WordTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

/// Probability that a uniform permutation of any length `>= len(tau)` matches:
/// `Π_{j: N} (1 - 1/j) · Π_{j: Y} 1/j`.
pub fn perm_template_probability(tau: &PermTemplate) -> Rational {
    tau.letters
        .iter()
        .enumerate()
        .map(|(i, letter)| {
            let j = i + 1;
            match letter {
                PermLetter::Yes => frac(1, j),
                PermLetter::No => frac(j - 1, j),
                PermLetter::Any => Rational::one(),
            }
        })
        .product()
}

/// Number of permutations of `[n]` matching `tau`, `n! · p(tau)`.
pub fn perm_template_count(tau: &PermTemplate, n: usize) -> Result<Integer, Error> {
    if n < tau.len() {
        return Err(Error::TemplateTooLong { len: tau.len(), n });
    }
    let count = perm_template_probability(tau) * Rational::from_integer(factorial(n));
    as_integer(&count).ok_or(Error::NonIntegral {
        value: count.to_string(),
    })
}

/// Generating function `Σ_k f(k, tau) x^k` for the number of words over `[k]`
/// matching `tau`, folded left to right from `1/(1-x)`.
///
/// The first position is always strictly outstanding, so a leading `W` acts
/// as `S` and a leading `o` as `s`. The operators for `W` and `o` assume a
/// series with no constant term and only see one after the first letter.
pub fn word_template_gf(tau: &WordTemplate) -> GeomForm {
    let mut letters = tau.letters.iter().copied();
    let first = match letters.next().expect("templates are nonempty") {
        WordLetter::Weak => WordLetter::Strong,
        WordLetter::NotOutstanding => WordLetter::NotStrong,
        other => other,
    };
    letters.fold(first.apply(&geom_empty()), |f, letter| letter.apply(&f))
}

/// `f(k, tau)`, the coefficient of `x^k` in [`word_template_gf`].
pub fn word_template_count(tau: &WordTemplate, k: usize) -> Result<Integer, Error> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let c = word_template_gf(tau).coeff(k);
    match as_integer(&c) {
        Some(n) if n >= Integer::zero() => Ok(n),
        _ => Err(Error::NonIntegral { value: c.to_string() }),
    }
}

/// Whether the permutation `w` matches `tau` on its first `len(tau)` positions.
pub fn matches_perm(w: &[u32], tau: &PermTemplate) -> bool {
    if w.len() < tau.len() {
        return false;
    }
    let mut max = 0u32;
    tau.letters.iter().zip(w).all(|(letter, &v)| {
        let record = v > max;
        max = max.max(v);
        match letter {
            PermLetter::Yes => record,
            PermLetter::No => !record,
            PermLetter::Any => true,
        }
    })
}

/// Whether the word `w` (letters `>= 1`) matches `tau` position by position.
pub fn matches_word(w: &[u32], tau: &WordTemplate) -> bool {
    if w.len() != tau.len() {
        return false;
    }
    // Letters are positive, so 0 stands for the empty prefix.
    let mut max = 0u32;
    tau.letters.iter().zip(w).all(|(letter, &v)| {
        let ok = match letter {
            WordLetter::Strong => v > max,
            WordLetter::Weak => v >= max,
            WordLetter::Any => true,
            WordLetter::NotStrong => v <= max,
            WordLetter::NotOutstanding => v < max,
        };
        max = max.max(v);
        ok
    })
}
