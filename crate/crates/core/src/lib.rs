//! Exact distributions of strongly and weakly outstanding elements
//! (left-to-right maxima) in multiset permutations and in words over a finite
//! alphabet, together with a template calculus for positional constraints.
//!
//! Every closed form is computed over exact rationals and can be checked
//! against the brute-force enumerations in [`oracle`].

pub mod error;
pub mod exact;
pub mod gf;
pub mod multiset;
pub mod oracle;
pub mod poly;
pub mod template;
pub mod verify;
pub mod words;

pub use error::Error;
pub use exact::{Integer, Rational};
pub use gf::GeomForm;
pub use multiset::MultisetSpec;
pub use poly::{BivariatePolynomial, Polynomial};
pub use template::{PermTemplate, WordTemplate};
pub use words::WordParams;
