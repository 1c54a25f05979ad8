//! Finitely presented group kernel: words, presentations, abelianization,
//! coset enumeration, and small-quotient identification.

mod abelian;
pub mod catalog;
mod coset;
mod perm;
mod presentation;
mod snf;
mod word;

pub use abelian::{abelianization, AbelianInvariants};
pub use coset::{coset_enumeration, CosetTable, TableStatus, DEFAULT_MAX_COSETS};
pub use perm::{is_normal, quotient_identify};
pub use presentation::{parse_words, GroupPresentation};
pub use snf::{rank, smith_normal_form};
pub use word::{commutator_pattern_check, free_reduce, Syllable, Word};

/// Errors raised by the group kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word syntax: {0}")]
    WordSyntax(String),
    #[error("presentation line {line}: {msg}")]
    PresentationSyntax { line: usize, msg: String },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("word uses `{0}` which is not a generator")]
    UnknownGenerator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("max_cosets must be at least 1")]
    ZeroBound,
    #[error("relator exponent too large to trace")]
    ExponentOverflow,
    #[error("coset table overflowed its bound of {0}")]
    Overflowed(usize),
    #[error("quotient identification requires a normal subgroup")]
    NotNormal,
}
