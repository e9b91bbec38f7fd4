//! Brute-force ground truth: exhaustive enumeration plus direct counting.
//!
//! Nothing here touches the closed forms; it only walks sequences and looks
//! at prefixes.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exact::{rat, Integer};
use crate::multiset::MultisetSpec;
use crate::poly::Polynomial;
use crate::template::{PermLetter, PermTemplate, WordLetter, WordTemplate};

/// A finite sequence of positive letters.
pub type Sequence = Vec<u32>;

pub const DEFAULT_MULTISET_CAP: usize = 10;
pub const DEFAULT_WORD_CAP: u64 = 10_000_000;

/// Upper limits on enumeration sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest multiset size `N` that may be enumerated.
    pub multiset: usize,
    /// Largest number of words `k^n` that may be enumerated.
    pub words: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            multiset: DEFAULT_MULTISET_CAP,
            words: DEFAULT_WORD_CAP,
        }
    }
}

/// 1-based positions `j` with `w_i < w_j` for every `i < j`.
pub fn strong_positions(w: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for j in 0..w.len() {
        if w[..j].iter().all(|&v| v < w[j]) {
            out.push(j + 1);
        }
    }
    out
}

/// 1-based positions `j` with `w_i <= w_j` for every `i < j`.
pub fn weak_positions(w: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for j in 0..w.len() {
        if w[..j].iter().all(|&v| v <= w[j]) {
            out.push(j + 1);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Strong,
    Weak,
}

impl Statistic {
    pub fn of(self, w: &[u32]) -> usize {
        match self {
            Statistic::Strong => strong_positions(w).len(),
            Statistic::Weak => weak_positions(w).len(),
        }
    }
}

/// Lexicographic enumeration of the distinct permutations of a multiset.
pub struct MultisetPermutations {
    next: Option<Sequence>,
}

impl MultisetPermutations {
    fn from_sorted(first: Sequence) -> Self {
        Self { next: Some(first) }
    }
}

impl Iterator for MultisetPermutations {
    type Item = Sequence;

    fn next(&mut self) -> Option<Sequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Rearranges `w` into its lexicographic successor; false at the last one.
fn next_permutation(w: &mut [u32]) -> bool {
    let Some(i) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = w.iter().rposition(|&v| v > w[i]).expect("w[i+1] > w[i]");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// Every distinct permutation of `M`, in lexicographic order.
pub fn enumerate_multiset_perms(m: &MultisetSpec, caps: Caps) -> Result<MultisetPermutations, Error> {
    if m.total() > caps.multiset {
        return Err(Error::CapExceeded {
            requested: format!("multiset of size {}", m.total()),
            cap: caps.multiset as u64,
        });
    }
    let first = m
        .multiplicities()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i as u32 + 1, a))
        .collect();
    Ok(MultisetPermutations::from_sorted(first))
}

/// Every permutation of `[n]`, in lexicographic order.
pub fn enumerate_perms(n: usize, caps: Caps) -> Result<MultisetPermutations, Error> {
    if n > caps.multiset {
        return Err(Error::CapExceeded {
            requested: format!("permutations of size {n}"),
            cap: caps.multiset as u64,
        });
    }
    Ok(MultisetPermutations::from_sorted((1..=n as u32).collect()))
}

/// Lexicographic enumeration of `[k]^n`.
pub struct Words {
    k: u32,
    next: Option<Sequence>,
}

impl Iterator for Words {
    type Item = Sequence;

    fn next(&mut self) -> Option<Sequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // odometer, rightmost digit fastest
        for d in succ.iter_mut().rev() {
            if *d < self.k {
                *d += 1;
                self.next = Some(succ);
                break;
            }
            *d = 1;
        }
        Some(current)
    }
}

pub fn enumerate_words(n: usize, k: usize, caps: Caps) -> Result<Words, Error> {
    let total = (k as u64).checked_pow(n as u32);
    if total.is_none_or(|t| t > caps.words) {
        return Err(Error::CapExceeded {
            requested: format!("{k}^{n} words"),
            cap: caps.words,
        });
    }
    let next = (k > 0).then(|| vec![1; n]);
    Ok(Words { k: k as u32, next })
}

/// Empirical distribution of a statistic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl Distribution {
    pub fn record(&mut self, value: usize) {
        *self.counts.entry(value).or_default() += 1;
        self.total += 1;
    }

    /// Pointwise sum; associative and commutative.
    pub fn merge(mut self, other: &Distribution) -> Distribution {
        for (&v, &c) in &other.counts {
            *self.counts.entry(v).or_default() += c;
        }
        self.total += other.total;
        self
    }

    pub fn count(&self, value: usize) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// `Σ_v count(v) x^v`
    pub fn to_polynomial(&self) -> Polynomial {
        let deg = self.counts.keys().next_back().copied().unwrap_or(0);
        Polynomial::new((0..=deg).map(|v| rat(self.count(v))).collect())
    }

    /// Sum of the statistic over all sequences.
    pub fn sum(&self) -> u64 {
        self.counts.iter().map(|(&v, &c)| v as u64 * c).sum()
    }
}

pub fn distribution<I>(source: I, statistic: Statistic) -> Distribution
where
    I: IntoIterator<Item = Sequence>,
{
    let mut d = Distribution::default();
    for w in source {
        d.record(statistic.of(&w));
    }
    d
}

/// Anything a template can be tested against.
pub trait Template {
    fn matches(&self, w: &[u32]) -> bool;
}

// Matching goes through the position sets, not the template module's own
// single-pass matcher.
impl Template for PermTemplate {
    fn matches(&self, w: &[u32]) -> bool {
        if w.len() < self.len() {
            return false;
        }
        let strong = strong_positions(w);
        self.letters().iter().enumerate().all(|(i, letter)| {
            let hit = strong.contains(&(i + 1));
            match letter {
                PermLetter::Yes => hit,
                PermLetter::No => !hit,
                PermLetter::Any => true,
            }
        })
    }
}

impl Template for WordTemplate {
    fn matches(&self, w: &[u32]) -> bool {
        if w.len() != self.len() {
            return false;
        }
        let strong = strong_positions(w);
        let weak = weak_positions(w);
        self.letters().iter().enumerate().all(|(i, letter)| {
            let j = i + 1;
            match letter {
                WordLetter::Strong => strong.contains(&j),
                WordLetter::Weak => weak.contains(&j),
                WordLetter::Any => true,
                WordLetter::NotStrong => !strong.contains(&j),
                WordLetter::NotOutstanding => !weak.contains(&j),
            }
        })
    }
}

pub fn count_template_matches<I, T>(source: I, tau: &T) -> Integer
where
    I: IntoIterator<Item = Sequence>,
    T: Template + ?Sized,
{
    Integer::from(source.into_iter().filter(|w| tau.matches(w)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(s: &str) -> Vec<u32> {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    fn spec(a: &[usize]) -> MultisetSpec {
        MultisetSpec::new(a.to_vec()).unwrap()
    }

    #[test]
    fn position_examples() {
        assert_eq!(strong_positions(&digits("211")), vec![1]);
        assert_eq!(strong_positions(&digits("12")), vec![1, 2]);
        // 2 1 4 5 7 6 3: the 4 in position 3 beats everything before it too
        assert_eq!(strong_positions(&digits("2145763")), vec![1, 3, 4, 5]);
        assert_eq!(weak_positions(&digits("112")), vec![1, 2, 3]);
        assert_eq!(weak_positions(&digits("11")), vec![1, 2]);
        assert_eq!(weak_positions(&digits("211")), vec![1]);
    }

    #[test]
    fn monotone_sequences() {
        let up = digits("13579");
        assert_eq!(strong_positions(&up), vec![1, 2, 3, 4, 5]);
        assert_eq!(weak_positions(&up), vec![1, 2, 3, 4, 5]);
        let down = digits("97531");
        assert_eq!(strong_positions(&down), vec![1]);
        assert_eq!(weak_positions(&down), vec![1]);
    }

    #[test]
    fn multiset_enumeration_examples() {
        let all: Vec<_> = enumerate_multiset_perms(&spec(&[2, 1]), Caps::default())
            .unwrap()
            .collect();
        assert_eq!(all, vec![digits("112"), digits("121"), digits("211")]);
        let all: Vec<_> = enumerate_multiset_perms(&spec(&[1, 1]), Caps::default())
            .unwrap()
            .collect();
        assert_eq!(all, vec![digits("12"), digits("21")]);
        assert_eq!(
            enumerate_multiset_perms(&spec(&[3]), Caps::default()).unwrap().count(),
            1
        );
        for a in [vec![2, 2, 1], vec![1, 3, 1, 2], vec![4, 4]] {
            let m = spec(&a);
            let n = enumerate_multiset_perms(&m, Caps::default()).unwrap().count();
            assert_eq!(Integer::from(n), m.permutation_count());
        }
    }

    #[test]
    fn caps_are_enforced() {
        let m = spec(&[6, 6]);
        assert!(matches!(
            enumerate_multiset_perms(&m, Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
        let tight = Caps { multiset: 10, words: 100 };
        assert!(enumerate_words(3, 5, tight).is_err());
        assert!(enumerate_words(2, 10, tight).is_ok());
        assert!(enumerate_words(64, 10, Caps::default()).is_err());
    }

    #[test]
    fn word_enumeration_examples() {
        let all: Vec<_> = enumerate_words(2, 2, Caps::default()).unwrap().collect();
        assert_eq!(all, vec![digits("11"), digits("12"), digits("21"), digits("22")]);
        assert_eq!(enumerate_words(1, 6, Caps::default()).unwrap().count(), 6);
        assert_eq!(enumerate_words(3, 2, Caps::default()).unwrap().count(), 8);
    }

    #[test]
    fn distribution_examples() {
        let d = distribution(
            enumerate_multiset_perms(&spec(&[2, 1]), Caps::default()).unwrap(),
            Statistic::Strong,
        );
        assert_eq!(d.counts, BTreeMap::from([(1, 1), (2, 2)]));
        assert_eq!(d.total, 3);
        let d = distribution(enumerate_words(2, 2, Caps::default()).unwrap(), Statistic::Weak);
        assert_eq!(d.counts, BTreeMap::from([(1, 1), (2, 3)]));
        let d = distribution(
            enumerate_multiset_perms(&spec(&[4]), Caps::default()).unwrap(),
            Statistic::Strong,
        );
        assert_eq!(d.counts, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn merge_is_commutative() {
        let a = distribution(enumerate_words(3, 2, Caps::default()).unwrap(), Statistic::Weak);
        let b = distribution(enumerate_words(2, 3, Caps::default()).unwrap(), Statistic::Weak);
        assert_eq!(a.clone().merge(&b), b.clone().merge(&a));
        assert_eq!(a.clone().merge(&b).total, a.total + b.total);
    }

    #[test]
    fn template_counts() {
        let tau: PermTemplate = "YN*YY".parse().unwrap();
        let perms = enumerate_perms(5, Caps::default()).unwrap();
        assert_eq!(count_template_matches(perms, &tau), Integer::from(3));
        let tau: WordTemplate = "S*s".parse().unwrap();
        let words = enumerate_words(3, 2, Caps::default()).unwrap();
        assert_eq!(count_template_matches(words, &tau), Integer::from(7));
        let tau: PermTemplate = "****".parse().unwrap();
        let perms = enumerate_perms(4, Caps::default()).unwrap();
        assert_eq!(count_template_matches(perms, &tau), Integer::from(24));
    }
}
