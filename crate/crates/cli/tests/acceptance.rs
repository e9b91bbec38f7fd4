//! One line per acceptance criterion, all checks exact. Run with
//! `cargo test -p outstanding-cli --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Signed};

use outstanding::exact::{binomial, factorial, frac, harmonic, rat, stirling_first_row, Rational};
use outstanding::gf::GeomForm;
use outstanding::multiset::{self, MultisetSpec};
use outstanding::oracle::{self, Caps, Statistic, Template as _};
use outstanding::poly::Polynomial;
use outstanding::template::{self, PermTemplate, WordTemplate};
use outstanding::verify;
use outstanding::words::{self, WordParams};
use outstanding_cli::record::{OutputRecord, Payload};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn caps() -> Caps {
    Caps::default()
}

fn sweep() -> Vec<MultisetSpec> {
    verify::multiset_specs(8, 4)
}

fn multiset_distribution(m: &MultisetSpec, stat: Statistic) -> oracle::Distribution {
    oracle::distribution(oracle::enumerate_multiset_perms(m, caps()).unwrap(), stat)
}

fn c1_multiset_strong() -> Check {
    let specs = sweep();
    for m in &specs {
        let brute = multiset_distribution(m, Statistic::Strong).to_polynomial();
        ensure(multiset::strong_gf(m) == brute, || format!("M=({m}): {} vs {brute}", multiset::strong_gf(m)))?;
    }
    Ok(format!("{} multisets", specs.len()))
}

fn c2_multiset_weak() -> Check {
    let specs = sweep();
    for m in &specs {
        let brute = multiset_distribution(m, Statistic::Weak).to_polynomial();
        ensure(multiset::weak_gf(m) == brute, || format!("M=({m}): {} vs {brute}", multiset::weak_gf(m)))?;
    }
    Ok(format!("{} multisets", specs.len()))
}

fn c3_stirling() -> Check {
    for k in 1..=8 {
        let f = multiset::strong_gf(&MultisetSpec::permutation(k).unwrap());
        let rising: Polynomial = (0..k as i64).map(|j| Polynomial::linear(rat(j), rat(1))).product();
        let row: Vec<Rational> = stirling_first_row(k).into_iter().map(rat).collect();
        ensure(f == rising, || format!("k={k}: {f} vs rising factorial {rising}"))?;
        ensure(f == Polynomial::new(row), || format!("k={k}: Stirling row mismatch"))?;
    }
    Ok("k <= 8".into())
}

fn c4_means() -> Check {
    let specs = sweep();
    for m in &specs {
        let total = rat(m.permutation_count());
        let strong = rat(multiset_distribution(m, Statistic::Strong).sum()) / &total;
        let weak = rat(multiset_distribution(m, Statistic::Weak).sum()) / &total;
        ensure(multiset::strong_mean(m) == strong, || format!("M=({m}): strong mean"))?;
        ensure(multiset::weak_mean(m) == weak, || format!("M=({m}): weak mean"))?;
        let g = multiset::mean_gap_and_bound(m);
        ensure(g.gap == &weak - &strong, || format!("M=({m}): gap is not weak - strong"))?;
        ensure(g.gap == multiset::mean_gap(m), || format!("M=({m}): gap formula"))?;
        ensure(!g.gap.is_negative() && g.gap <= g.bound, || {
            format!("M=({m}): gap {} outside [0, {}]", g.gap, g.bound)
        })?;
    }
    Ok(format!("{} multisets", specs.len()))
}

fn c5_darroch() -> Check {
    let specs = sweep();
    for m in &specs {
        let brute = multiset_distribution(m, Statistic::Strong);
        let mean = multiset::strong_mean(m);
        let peak = (0..=m.total()).map(|r| brute.count(r)).max().unwrap();
        for r in (0..=m.total()).filter(|&r| brute.count(r) == peak) {
            ensure((rat(r) - &mean).abs() <= Rational::one(), || format!("M=({m}): mode {r}, mean {mean}"))?;
        }
        ensure(multiset::darroch_check(m).ok, || format!("M=({m}): darroch_check"))?;
        let f = multiset::strong_gf(m);
        let c = f.coeffs();
        for r in 1..c.len().saturating_sub(1) {
            ensure(&c[r] * &c[r] >= &c[r - 1] * &c[r + 1], || format!("M=({m}): not log-concave at {r}"))?;
        }
        ensure(multiset::is_log_concave(&f), || format!("M=({m}): is_log_concave"))?;
    }
    Ok(format!("{} multisets", specs.len()))
}

fn words_grid(max_n: usize, max_k: usize) -> impl Iterator<Item = WordParams> {
    (1..=max_n).flat_map(move |n| (1..=max_k).map(move |k| WordParams::new(n, k).unwrap()))
}

fn c6_words_strong() -> Check {
    for p in words_grid(7, 4) {
        let words = oracle::enumerate_words(p.n(), p.k(), caps()).unwrap();
        let brute = oracle::distribution(words, Statistic::Strong);
        for r in 0..=p.n() + 1 {
            ensure(words::strong_count(p, r) == brute.count(r).into(), || {
                format!("n={} k={} r={r}", p.n(), p.k())
            })?;
        }
        let sum: Rational = (0..=p.n()).map(|r| rat(words::strong_count(p, r))).sum();
        ensure(sum == rat(p.word_count()), || format!("n={} k={}: sum is not k^n", p.n(), p.k()))?;
    }
    Ok("n <= 7, k <= 4".into())
}

fn c7_words_weak() -> Check {
    for p in words_grid(8, 5) {
        let delta = words::weak_gf_words(p);
        ensure(delta == words::weak_gf_words_alternating(p), || format!("n={} k={}: alternating", p.n(), p.k()))?;
        ensure(delta == words::weak_gf_words_recurrence(p), || format!("n={} k={}: recurrence", p.n(), p.k()))?;
    }
    for p in words_grid(7, 4) {
        let words = oracle::enumerate_words(p.n(), p.k(), caps()).unwrap();
        let brute = oracle::distribution(words, Statistic::Weak).to_polynomial();
        ensure(words::weak_gf_words(p) == brute, || format!("n={} k={}: oracle", p.n(), p.k()))?;
    }
    Ok("forms agree n <= 8, k <= 5; oracle n <= 7, k <= 4".into())
}

fn c8_asymptotic_means() -> Check {
    for k in 2..=4 {
        let h = harmonic(k);
        let gaps: Vec<Rational> = (4..=12)
            .map(|n| (words::strong_mean_words(WordParams::new(n, k).unwrap()) - &h).abs())
            .collect();
        ensure(gaps.windows(2).all(|w| w[1] < w[0]), || format!("k={k}: strong gaps not decreasing"))?;
        let h1 = harmonic(k - 1);
        let ratio = frac(k as i64 - 1, k as i64);
        for n in 6..=12 {
            let mean = words::weak_mean_words(WordParams::new(n, k).unwrap());
            let dev = (mean - frac(n as i64, k as i64) - &h1).abs();
            let bound = num_traits::pow(ratio.clone(), n - 2);
            ensure(dev <= bound, || format!("k={k} n={n}: weak deviation {dev} > {bound}"))?;
        }
    }
    Ok("k in {2,3,4}".into())
}

fn c9_gauss() -> Check {
    for k in 1..=6 {
        ensure(words::gauss_identity_check(k), || format!("identity k={k}"))?;
    }
    for k in 1..=3 {
        for order in 0..=6 {
            ensure(words::bivariate_strong_gf_check(k, order), || format!("series k={k} order={order}"))?;
        }
    }
    Ok("identity k <= 6; series k <= 3, order <= 6".into())
}

fn c10_perm_templates() -> Check {
    let templates = verify::perm_templates(5);
    for tau in &templates {
        verify::check_perm_template(tau, 7, caps()).map_err(|e| format!("{tau}: {e}"))?;
        let p = template::perm_template_probability(tau);
        for n in tau.len()..=7 {
            let count = template::perm_template_count(tau, n).unwrap();
            ensure(rat(count) / rat(factorial(n)) == p, || format!("{tau}: probability varies at n={n}"))?;
        }
    }
    let tau: PermTemplate = "YN*YY".parse().unwrap();
    ensure(template::perm_template_probability(&tau) == frac(1, 40), || "YN*YY is not 1/40".into())?;
    let witness = [2, 1, 4, 5, 7, 6, 3];
    ensure(template::matches_perm(&witness, &tau) && tau.matches(&witness), || "2145763 does not match".into())?;
    Ok(format!("{} templates, n <= 7", templates.len()))
}

fn c11_word_templates() -> Check {
    let templates = verify::word_templates(4);
    for tau in &templates {
        verify::check_word_template(tau, 5, caps()).map_err(|e| format!("{tau}: {e}"))?;
    }
    let tau: WordTemplate = "S*s".parse().unwrap();
    let expected = GeomForm::new(Polynomial::from_integers([0, 1, 3]), 4);
    let got = template::word_template_gf(&tau);
    ensure(got == expected, || format!("S*s gives {got}"))?;
    for k in 1..=10 {
        let closed = binomial(k + 2, 3).unwrap() + 3 * binomial(k + 1, 3).unwrap();
        let count = template::word_template_count(&tau, k as usize).unwrap();
        ensure(count == closed, || format!("S*s k={k}: {count} vs {closed}"))?;
    }
    Ok(format!("{} templates, k <= 5", templates.len()))
}

fn c12_cli() -> Check {
    let out = common::run(&["verify", "all"]);
    ensure(out.status.success(), || format!("verify all exited {:?}", out.status.code()))?;
    let record = OutputRecord::from_json(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
    let cases = match record.payload {
        Payload::Report { passed: true, suites } if suites.len() == 3 && suites.iter().all(|s| s.passed) => {
            suites.iter().map(|s| s.cases).sum::<usize>()
        }
        other => return Err(format!("unexpected report {other:?}")),
    };
    for e in common::EXAMPLES {
        common::check(e).map_err(|why| format!("`{}`: {why}", e.args))?;
    }
    Ok(format!("{cases} verify cases; {} worked examples", common::EXAMPLES.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("multiset strong distribution vs oracle", c1_multiset_strong),
        ("multiset weak distribution vs oracle", c2_multiset_weak),
        ("permutations give Stirling rows", c3_stirling),
        ("multiset means and gap bound", c4_means),
        ("mode within 1 of mean; log-concavity", c5_darroch),
        ("word strong counts vs oracle", c6_words_strong),
        ("word weak forms agree and match oracle", c7_words_weak),
        ("word means approach their limits", c8_asymptotic_means),
        ("Gauss identity and bivariate series", c9_gauss),
        ("permutation templates", c10_perm_templates),
        ("word templates", c11_word_templates),
        ("cli verify all and worked examples", c12_cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
