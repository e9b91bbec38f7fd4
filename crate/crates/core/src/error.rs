use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial C({n}, {k}) needs a nonnegative upper index")]
    NegativeBinomial { n: i64, k: i64 },

    #[error("multiset needs at least one letter")]
    EmptyMultiset,

    #[error("multiplicity of letter {letter} is zero; omit absent letters instead")]
    ZeroMultiplicity { letter: usize },

    #[error("phi_{{N,a}} needs a <= N, got N = {n}, a = {a}")]
    PhiOutOfRange { n: usize, a: usize },

    #[error("word length and alphabet size must be positive, got n = {n}, k = {k}")]
    InvalidWordParams { n: usize, k: usize },

    #[error("template is empty")]
    EmptyTemplate,

    #[error("letter 'O' at position {position} has no defined operator")]
    UndefinedTemplateLetter { position: usize },

    #[error("unexpected character {found:?} at position {position}; expected one of {expected}")]
    TemplateSyntax {
        position: usize,
        found: char,
        expected: &'static str,
    },

    #[error("template of length {len} does not fit a sequence of length {n}")]
    TemplateTooLong { len: usize, n: usize },

    #[error("alphabet size must be positive")]
    EmptyAlphabet,

    #[error("coefficient {value} is not an integer")]
    NonIntegral { value: String },

    #[error("enumeration of {requested} items exceeds the cap of {cap}")]
    CapExceeded { requested: String, cap: u64 },
}
