//! Exhaustive cross-check sweeps.
//!
//! Each suite runs a family of cases in parallel and reports them in a fixed
//! order, so two runs with the same bounds print the same report.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;

use crate::exact::{rat, Rational};
use crate::multiset::{self, MultisetSpec};
use crate::oracle::{self, Caps, Statistic};
use crate::template::{self, PermLetter, PermTemplate, WordLetter, WordTemplate};
use crate::words::{self, WordParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Gauss,
    Recurrence,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Gauss, Suite::Recurrence, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gauss => "gauss",
            Suite::Recurrence => "recurrence",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Sweep ranges. The defaults are the ranges the test suite pins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub gauss_k: usize,
    pub series_k: usize,
    pub series_order: usize,
    pub recurrence_n: usize,
    pub recurrence_k: usize,
    pub multiset_n: usize,
    pub multiset_k: usize,
    pub word_n: usize,
    pub word_k: usize,
    pub perm_template_len: usize,
    pub perm_n: usize,
    pub word_template_len: usize,
    pub word_template_k: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            gauss_k: 6,
            series_k: 3,
            series_order: 6,
            recurrence_n: 8,
            recurrence_k: 5,
            multiset_n: 8,
            multiset_k: 4,
            word_n: 7,
            word_k: 4,
            perm_template_len: 5,
            perm_n: 7,
            word_template_len: 4,
            word_template_k: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOutcome {
    pub case: String,
    /// `None` on success, otherwise the counterexample.
    pub failure: Option<String>,
}

impl CaseOutcome {
    fn check(case: impl Into<String>, result: Result<(), String>) -> Self {
        Self {
            case: case.into(),
            failure: result.err(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

pub fn run(suite: Suite, bounds: &Bounds, caps: Caps) -> SuiteReport {
    let cases = match suite {
        Suite::Gauss => gauss_cases(bounds),
        Suite::Recurrence => recurrence_cases(bounds),
        Suite::Oracle => oracle_cases(bounds, caps),
    };
    SuiteReport { suite, cases }
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn gauss_cases(b: &Bounds) -> Vec<CaseOutcome> {
    let identity = (1..=b.gauss_k).into_par_iter().map(|k| {
        let ok = words::gauss_identity_check(k);
        CaseOutcome::check(
            format!("identity k={k}"),
            ok.then_some(()).ok_or_else(|| "cleared sides differ".to_string()),
        )
    });
    let series = (1..=b.series_k).into_par_iter().flat_map(|k| {
        (1..=b.series_order).into_par_iter().map(move |order| {
            let ok = words::bivariate_strong_gf_check(k, order);
            CaseOutcome::check(
                format!("series k={k} order={order}"),
                ok.then_some(()).ok_or_else(|| "coefficient mismatch".to_string()),
            )
        })
    });
    identity.chain(series).collect()
}

fn recurrence_cases(b: &Bounds) -> Vec<CaseOutcome> {
    let weak = grid(b.recurrence_n, b.recurrence_k).into_par_iter().map(|(n, k)| {
        let p = WordParams::new(n, k).expect("positive");
        let delta = words::weak_gf_words(p);
        let result = expect_eq("alternating sum", words::weak_gf_words_alternating(p), delta.clone())
            .and_then(|_| expect_eq("recurrence", words::weak_gf_words_recurrence(p), delta.clone()))
            .and_then(|_| expect_eq("G(1)", delta.eval(&Rational::one()), rat(p.word_count())));
        CaseOutcome::check(format!("words weak n={n} k={k}"), result)
    });
    let strong = multiset_specs(b.multiset_n, b.multiset_k).into_par_iter().map(|m| {
        let f = multiset::strong_gf(&m);
        let mut result = expect_eq("prefactored", multiset::strong_gf_prefactored(&m), f.clone());
        for r in 0..=m.total() {
            if result.is_err() {
                break;
            }
            result = expect_eq(
                &format!("recurrence r={r}"),
                rat(multiset::strong_count_recurrence(&m, r)),
                f.coeff(r),
            );
        }
        CaseOutcome::check(format!("multiset strong M=({m})"), result)
    });
    weak.chain(strong).collect()
}

fn oracle_cases(b: &Bounds, caps: Caps) -> Vec<CaseOutcome> {
    let mut cases = Vec::new();
    cases.par_extend(
        multiset_specs(b.multiset_n, b.multiset_k)
            .into_par_iter()
            .map(|m| CaseOutcome::check(format!("multiset M=({m})"), check_multiset(&m, caps))),
    );
    cases.par_extend(grid(b.word_n, b.word_k).into_par_iter().map(|(n, k)| {
        let p = WordParams::new(n, k).expect("positive");
        CaseOutcome::check(format!("words n={n} k={k}"), check_words(p, caps))
    }));
    cases.par_extend(
        perm_templates(b.perm_template_len)
            .into_par_iter()
            .map(|tau| CaseOutcome::check(format!("perm template {tau}"), check_perm_template(&tau, b.perm_n, caps))),
    );
    cases.par_extend(
        word_templates(b.word_template_len)
            .into_par_iter()
            .map(|tau| {
                CaseOutcome::check(
                    format!("word template {tau}"),
                    check_word_template(&tau, b.word_template_k, caps),
                )
            }),
    );
    cases
}

/// Closed forms for `M` against exhaustive enumeration: both distributions
/// and both means.
pub fn check_multiset(m: &MultisetSpec, caps: Caps) -> Result<(), String> {
    let strong = oracle::distribution(
        oracle::enumerate_multiset_perms(m, caps).map_err(|e| e.to_string())?,
        Statistic::Strong,
    );
    let weak = oracle::distribution(
        oracle::enumerate_multiset_perms(m, caps).map_err(|e| e.to_string())?,
        Statistic::Weak,
    );
    let total = rat(strong.total);
    expect_eq("strong distribution", multiset::strong_gf(m), strong.to_polynomial())?;
    expect_eq("weak distribution", multiset::weak_gf(m), weak.to_polynomial())?;
    expect_eq("strong mean", multiset::strong_mean(m), rat(strong.sum()) / &total)?;
    expect_eq("weak mean", multiset::weak_mean(m), rat(weak.sum()) / &total)
}

/// Word closed forms against exhaustive enumeration of `[k]^n`.
pub fn check_words(p: WordParams, caps: Caps) -> Result<(), String> {
    let enumerate = || oracle::enumerate_words(p.n(), p.k(), caps).map_err(|e| e.to_string());
    let strong = oracle::distribution(enumerate()?, Statistic::Strong);
    let weak = oracle::distribution(enumerate()?, Statistic::Weak);
    expect_eq("strong distribution", words::strong_gf_words(p), strong.to_polynomial())?;
    expect_eq("weak distribution", words::weak_gf_words(p), weak.to_polynomial())?;
    expect_eq("k^n", words::strong_total(p), p.word_count())
}

/// `perm_template_count(tau, n)` against a scan of `S_n` for every
/// `n` in `len(tau)..=max_n`.
pub fn check_perm_template(tau: &PermTemplate, max_n: usize, caps: Caps) -> Result<(), String> {
    for n in tau.len()..=max_n {
        let perms = oracle::enumerate_perms(n, caps).map_err(|e| e.to_string())?;
        let brute = oracle::count_template_matches(perms, tau);
        let closed = template::perm_template_count(tau, n).map_err(|e| e.to_string())?;
        expect_eq(&format!("n={n}"), closed, brute)?;
    }
    Ok(())
}

/// `word_template_count(tau, k)` against a scan of `[k]^len` for `k <= max_k`.
pub fn check_word_template(tau: &WordTemplate, max_k: usize, caps: Caps) -> Result<(), String> {
    for k in 1..=max_k {
        let words = oracle::enumerate_words(tau.len(), k, caps).map_err(|e| e.to_string())?;
        let brute = oracle::count_template_matches(words, tau);
        let closed = template::word_template_count(tau, k).map_err(|e| e.to_string())?;
        expect_eq(&format!("k={k}"), closed, brute)?;
    }
    Ok(())
}

fn grid(max_n: usize, max_k: usize) -> Vec<(usize, usize)> {
    (1..=max_n)
        .flat_map(|n| (1..=max_k).map(move |k| (n, k)))
        .collect()
}

/// All compositions of `total` into at most `max_parts` positive parts, in
/// lexicographic order.
pub fn compositions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for first in 1..=left {
            prefix.push(first);
            go(left - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        go(total, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Every multiset with `1 <= N <= max_n` and at most `max_k` distinct letters.
pub fn multiset_specs(max_n: usize, max_k: usize) -> Vec<MultisetSpec> {
    (1..=max_n)
        .flat_map(|n| compositions(n, max_k))
        .map(|a| MultisetSpec::new(a).expect("compositions have positive parts"))
        .collect()
}

/// Every permutation template of length `1..=max_len`.
pub fn perm_templates(max_len: usize) -> Vec<PermTemplate> {
    all_strings(&PermLetter::ALL, max_len)
        .into_iter()
        .map(|l| PermTemplate::new(l).expect("nonempty"))
        .collect()
}

/// Every word template of length `1..=max_len`.
pub fn word_templates(max_len: usize) -> Vec<WordTemplate> {
    all_strings(&WordLetter::ALL, max_len)
        .into_iter()
        .map(|l| WordTemplate::new(l).expect("nonempty"))
        .collect()
}

fn all_strings<T: Copy>(alphabet: &[T], max_len: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s| {
                alphabet.iter().map(move |&c| {
                    let mut next = s.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        // compositions of n into exactly j parts: C(n-1, j-1)
        assert_eq!(compositions(4, 4).len(), 8);
        assert_eq!(compositions(4, 2).len(), 1 + 3);
        assert_eq!(compositions(3, 4), vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert!(compositions(0, 3).is_empty());
    }

    #[test]
    fn template_enumeration_sizes() {
        assert_eq!(perm_templates(5).len(), 3 + 9 + 27 + 81 + 243);
        assert_eq!(word_templates(4).len(), 5 + 25 + 125 + 625);
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds {
            gauss_k: 3,
            series_k: 2,
            series_order: 3,
            recurrence_n: 4,
            recurrence_k: 3,
            multiset_n: 4,
            multiset_k: 3,
            word_n: 3,
            word_k: 3,
            perm_template_len: 3,
            perm_n: 4,
            word_template_len: 2,
            word_template_k: 3,
        };
        for suite in Suite::ALL {
            let report = run(suite, &b, Caps::default());
            assert!(report.passed(), "{suite}: {:?}", report.failures().collect::<Vec<_>>());
            assert!(!report.cases.is_empty());
        }
    }

    #[test]
    fn failures_carry_a_counterexample() {
        let tight = Caps { multiset: 2, words: 4 };
        let m = MultisetSpec::new(vec![2, 1]).unwrap();
        let err = check_multiset(&m, tight).unwrap_err();
        assert!(err.contains("exceeds the cap"), "{err}");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
