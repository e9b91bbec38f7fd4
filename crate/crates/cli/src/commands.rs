use clap::{Args, Parser, Subcommand, ValueEnum};

use outstanding::multiset::{self, MultisetSpec};
use outstanding::oracle::{self, Caps, Statistic, DEFAULT_MULTISET_CAP, DEFAULT_WORD_CAP};
use outstanding::template::{self, PermTemplate, WordTemplate};
use outstanding::verify::{self, Bounds, Suite};
use outstanding::words::{self, WordParams};

use crate::record::{OutputRecord, Payload, SuiteRow};

#[derive(Debug, Parser)]
#[command(name = "outstanding", version, about = "Exact left-to-right maxima statistics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distributions and means for permutations of a multiset.
    Multiset(MultisetArgs),
    /// Distributions and means for words of length n over [k].
    Words(WordsArgs),
    /// Closed-form template counts and probabilities.
    Template(TemplateArgs),
    /// Brute-force enumeration counts.
    Oracle(OracleArgs),
    /// Run cross-check sweeps; exits nonzero if any case fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Strong,
    Weak,
}

impl Stat {
    fn name(self) -> &'static str {
        match self {
            Stat::Strong => "strong",
            Stat::Weak => "weak",
        }
    }
}

impl From<Stat> for Statistic {
    fn from(s: Stat) -> Self {
        match s {
            Stat::Strong => Statistic::Strong,
            Stat::Weak => Statistic::Weak,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Want {
    Gf,
    Mean,
    Gap,
    Darroch,
    Prob,
    Count,
}

impl Want {
    fn name(self) -> &'static str {
        match self {
            Want::Gf => "gf",
            Want::Mean => "mean",
            Want::Gap => "gap",
            Want::Darroch => "darroch",
            Want::Prob => "prob",
            Want::Count => "count",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TemplateKind {
    Perm,
    Word,
}

#[derive(Debug, Args)]
pub struct MultisetArgs {
    #[arg(long, value_enum, default_value_t = Stat::Strong)]
    pub stat: Stat,
    /// Multiplicities a1,a2,...,ak (all positive).
    #[arg(long, value_delimiter = ',', required = true)]
    pub mult: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Want::Gf)]
    pub want: Want,
}

#[derive(Debug, Args)]
pub struct WordsArgs {
    #[arg(long, value_enum, default_value_t = Stat::Strong)]
    pub stat: Stat,
    /// Word length.
    #[arg(long)]
    pub n: usize,
    /// Alphabet size.
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Want::Gf)]
    pub want: Want,
}

#[derive(Debug, Args)]
pub struct TemplateArgs {
    #[arg(long, value_enum)]
    pub kind: TemplateKind,
    /// Template string: `[YN*]+` for permutations, `[SWso*]+` for words.
    #[arg(long)]
    pub tau: String,
    /// Permutation length (perm templates).
    #[arg(long)]
    pub n: Option<usize>,
    /// Alphabet size (word templates).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Want::Count)]
    pub want: Want,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, default_value_t = Stat::Strong)]
    pub stat: Stat,
    /// Enumerate permutations of this multiset.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["n", "k", "tau"])]
    pub mult: Option<Vec<usize>>,
    /// Sequence length (words, or permutations with --kind perm).
    #[arg(long)]
    pub n: Option<usize>,
    /// Alphabet size for words.
    #[arg(long)]
    pub k: Option<usize>,
    /// Count matches of a template instead of a distribution.
    #[arg(long, requires = "kind")]
    pub tau: Option<String>,
    #[arg(long, value_enum)]
    pub kind: Option<TemplateKind>,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Most words (k^n) a single enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
    pub cap: u64,
    /// Largest multiset or permutation size that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_MULTISET_CAP)]
    pub max_size: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            multiset: self.max_size,
            words: self.cap,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Gauss,
    Recurrence,
    Oracle,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long)]
    pub gauss_k: Option<usize>,
    #[arg(long)]
    pub recurrence_n: Option<usize>,
    #[arg(long)]
    pub recurrence_k: Option<usize>,
    #[arg(long)]
    pub multiset_n: Option<usize>,
    #[arg(long)]
    pub multiset_k: Option<usize>,
    #[arg(long)]
    pub word_n: Option<usize>,
    #[arg(long)]
    pub word_k: Option<usize>,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Core(#[from] outstanding::Error),
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: impl Into<String>) -> CommandError {
    CommandError::Usage(msg.into())
}

/// Result of one command: the record and whether it counts as success.
pub struct Outcome {
    pub record: OutputRecord,
    pub success: bool,
}

impl From<OutputRecord> for Outcome {
    fn from(record: OutputRecord) -> Self {
        Self { record, success: true }
    }
}

pub fn execute(command: &Command) -> Result<Outcome, CommandError> {
    match command {
        Command::Multiset(a) => cmd_multiset(a).map(Outcome::from),
        Command::Words(a) => cmd_words(a).map(Outcome::from),
        Command::Template(a) => cmd_template(a).map(Outcome::from),
        Command::Oracle(a) => cmd_oracle(a).map(Outcome::from),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn cmd_multiset(a: &MultisetArgs) -> Result<OutputRecord, CommandError> {
    let m = MultisetSpec::new(a.mult.clone())?;
    let inputs = [("stat", a.stat.name().to_string()), ("mult", join(&a.mult))];
    let payload = match (a.want, a.stat) {
        (Want::Gf, Stat::Strong) => Payload::polynomial(&multiset::strong_gf(&m)),
        (Want::Gf, Stat::Weak) => Payload::polynomial(&multiset::weak_gf(&m)),
        (Want::Mean, Stat::Strong) => Payload::scalar(&multiset::strong_mean(&m)),
        (Want::Mean, Stat::Weak) => Payload::scalar(&multiset::weak_mean(&m)),
        (Want::Gap, _) => {
            let g = multiset::mean_gap_and_bound(&m);
            Payload::Fields(
                [("gap", g.gap), ("bound", g.bound)]
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), crate::record::fraction(&v)))
                    .collect(),
            )
        }
        (Want::Darroch, _) => {
            let d = multiset::darroch_check(&m);
            Payload::Fields(
                [
                    ("mode", d.mode.to_string()),
                    ("mean", crate::record::fraction(&d.mean)),
                    ("ok", d.ok.to_string()),
                ]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            )
        }
        (want, _) => return Err(usage(format!("--want {} is not available for multiset", want.name()))),
    };
    let kind = format!("multiset.{}.{}", a.stat.name(), a.want.name());
    Ok(OutputRecord::new(kind, &inputs, payload))
}

pub fn cmd_words(a: &WordsArgs) -> Result<OutputRecord, CommandError> {
    let p = WordParams::new(a.n, a.k)?;
    let inputs = [
        ("stat", a.stat.name().to_string()),
        ("n", a.n.to_string()),
        ("k", a.k.to_string()),
    ];
    let payload = match (a.want, a.stat) {
        (Want::Gf, Stat::Strong) => Payload::polynomial(&words::strong_gf_words(p)),
        (Want::Gf, Stat::Weak) => Payload::polynomial(&words::weak_gf_words(p)),
        (Want::Mean, Stat::Strong) => Payload::scalar(&words::strong_mean_words(p)),
        (Want::Mean, Stat::Weak) => Payload::scalar(&words::weak_mean_words(p)),
        (want, _) => return Err(usage(format!("--want {} is not available for words", want.name()))),
    };
    let kind = format!("words.{}.{}", a.stat.name(), a.want.name());
    Ok(OutputRecord::new(kind, &inputs, payload))
}

pub fn cmd_template(a: &TemplateArgs) -> Result<OutputRecord, CommandError> {
    let mut inputs = vec![("tau", a.tau.clone())];
    let payload = match a.kind {
        TemplateKind::Perm => {
            let tau: PermTemplate = a.tau.parse()?;
            match a.want {
                Want::Prob => Payload::scalar(&template::perm_template_probability(&tau)),
                Want::Count => {
                    let n = a.n.ok_or_else(|| usage("--n is required for a permutation count"))?;
                    inputs.push(("n", n.to_string()));
                    Payload::integer(&template::perm_template_count(&tau, n)?)
                }
                other => {
                    return Err(usage(format!(
                        "--want {} is not available for permutation templates",
                        other.name()
                    )))
                }
            }
        }
        TemplateKind::Word => {
            let tau: WordTemplate = a.tau.parse()?;
            match a.want {
                Want::Gf => Payload::geom_form(&template::word_template_gf(&tau)),
                Want::Count => {
                    let k = a.k.ok_or_else(|| usage("--k is required for a word count"))?;
                    inputs.push(("k", k.to_string()));
                    Payload::integer(&template::word_template_count(&tau, k)?)
                }
                Want::Prob => return Err(usage("--want prob is only valid for permutation templates")),
                other => {
                    return Err(usage(format!(
                        "--want {} is not available for word templates",
                        other.name()
                    )))
                }
            }
        }
    };
    let kind_name = match a.kind {
        TemplateKind::Perm => "perm",
        TemplateKind::Word => "word",
    };
    Ok(OutputRecord::new(
        format!("template.{kind_name}.{}", a.want.name()),
        &inputs,
        payload,
    ))
}

type Sequences = Box<dyn Iterator<Item = Vec<u32>>>;

pub fn cmd_oracle(a: &OracleArgs) -> Result<OutputRecord, CommandError> {
    let caps = a.caps.caps();
    if let Some(tau) = &a.tau {
        let kind = a.kind.expect("clap enforces --kind with --tau");
        let mut inputs = vec![("tau", tau.clone())];
        let count = match kind {
            TemplateKind::Perm => {
                let tau: PermTemplate = tau.parse()?;
                let n = a.n.ok_or_else(|| usage("--n is required"))?;
                inputs.push(("n", n.to_string()));
                if n < tau.len() {
                    return Err(outstanding::Error::TemplateTooLong { len: tau.len(), n }.into());
                }
                oracle::count_template_matches(oracle::enumerate_perms(n, caps)?, &tau)
            }
            TemplateKind::Word => {
                let tau: WordTemplate = tau.parse()?;
                let k = a.k.ok_or_else(|| usage("--k is required"))?;
                inputs.push(("k", k.to_string()));
                oracle::count_template_matches(oracle::enumerate_words(tau.len(), k, caps)?, &tau)
            }
        };
        return Ok(OutputRecord::new("oracle.template.count", &inputs, Payload::integer(&count)));
    }
    let stat = Statistic::from(a.stat);
    if let Some(mult) = &a.mult {
        let m = MultisetSpec::new(mult.clone())?;
        let d = oracle::distribution(oracle::enumerate_multiset_perms(&m, caps)?, stat);
        let inputs = [("stat", a.stat.name().to_string()), ("mult", join(mult))];
        let kind = format!("oracle.multiset.{}", a.stat.name());
        return Ok(OutputRecord::new(kind, &inputs, Payload::polynomial(&d.to_polynomial())));
    }
    let n = a.n.ok_or_else(|| usage("give --mult, --n with --k, or --tau"))?;
    let (kind, inputs, source): (_, Vec<(&str, String)>, Sequences) =
        match (a.k, a.kind) {
            (_, Some(TemplateKind::Perm)) => (
                "perm",
                vec![("n", n.to_string())],
                Box::new(oracle::enumerate_perms(n, caps)?),
            ),
            (Some(k), _) => (
                "words",
                vec![("n", n.to_string()), ("k", k.to_string())],
                Box::new(oracle::enumerate_words(n, k, caps)?),
            ),
            (None, _) => return Err(usage("--k is required for words")),
        };
    let d = oracle::distribution(source, stat);
    let mut inputs = inputs;
    inputs.insert(0, ("stat", a.stat.name().to_string()));
    Ok(OutputRecord::new(
        format!("oracle.{kind}.{}", a.stat.name()),
        &inputs,
        Payload::polynomial(&d.to_polynomial()),
    ))
}

pub fn bounds(a: &VerifyArgs) -> Bounds {
    let mut b = Bounds::default();
    let set = |slot: &mut usize, v: Option<usize>| {
        if let Some(v) = v {
            *slot = v;
        }
    };
    set(&mut b.gauss_k, a.gauss_k);
    set(&mut b.recurrence_n, a.recurrence_n);
    set(&mut b.recurrence_k, a.recurrence_k);
    set(&mut b.multiset_n, a.multiset_n);
    set(&mut b.multiset_k, a.multiset_k);
    set(&mut b.word_n, a.word_n);
    set(&mut b.word_k, a.word_k);
    b
}

/// Rejects bounds whose enumerations would exceed the caps.
fn check_caps(b: &Bounds, caps: Caps) -> Result<(), CommandError> {
    let n = b.multiset_n.max(b.perm_n);
    if n > caps.multiset {
        return Err(outstanding::Error::CapExceeded {
            requested: format!("sequences of size {n}"),
            cap: caps.multiset as u64,
        }
        .into());
    }
    for (len, k) in [(b.word_n, b.word_k), (b.word_template_len, b.word_template_k)] {
        let count = (k as u128).checked_pow(len as u32);
        if count.is_none_or(|c| c > u128::from(caps.words)) {
            return Err(outstanding::Error::CapExceeded {
                requested: format!("{k}^{len} words"),
                cap: caps.words,
            }
            .into());
        }
    }
    Ok(())
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CommandError> {
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::Gauss => vec![Suite::Gauss],
        SuiteArg::Recurrence => vec![Suite::Recurrence],
        SuiteArg::Oracle => vec![Suite::Oracle],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let b = bounds(a);
    let caps = a.caps.caps();
    if suites.contains(&Suite::Oracle) {
        check_caps(&b, caps)?;
    }
    let rows: Vec<SuiteRow> = suites
        .into_iter()
        .map(|suite| {
            let report = verify::run(suite, &b, caps);
            let counterexamples: Vec<String> = report
                .failures()
                .map(|c| format!("{}: {}", c.case, c.failure.as_deref().unwrap_or_default()))
                .collect();
            SuiteRow {
                suite: suite.name().to_string(),
                cases: report.cases.len(),
                failed: counterexamples.len(),
                passed: report.passed(),
                counterexamples,
            }
        })
        .collect();
    let passed = rows.iter().all(|r| r.passed);
    let inputs = [
        ("suite", format!("{:?}", a.suite).to_lowercase()),
        (
            "bounds",
            format!(
                "gauss_k={} series_k={} series_order={} recurrence_n={} recurrence_k={} multiset_n={} multiset_k={} word_n={} word_k={} perm_template_len={} perm_n={} word_template_len={} word_template_k={}",
                b.gauss_k, b.series_k, b.series_order, b.recurrence_n, b.recurrence_k,
                b.multiset_n, b.multiset_k, b.word_n, b.word_k, b.perm_template_len,
                b.perm_n, b.word_template_len, b.word_template_k
            ),
        ),
    ];
    Ok(Outcome {
        record: OutputRecord::new("verify", &inputs, Payload::Report { passed, suites: rows }),
        success: passed,
    })
}
