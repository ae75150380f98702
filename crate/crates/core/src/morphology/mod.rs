//! Word-and-paradigm inflection.
//!
//! Paradigms are functions from one or more dictionary forms to a complete
//! inflection table. String surgery always happens on roman tokens of the
//! shipped transliteration table, never on bytes, so `l(a)R'ka` has six
//! tokens and dropping one leaves `l(a)R'k`.

mod adj;
pub mod features;
mod noun;
mod paradigm;
mod verb;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::translit::{self, TranslitError};

pub use adj::{adj_paradigm, Adjective};
pub use features::*;
pub use noun::{mk_noun, noun_group1, noun_paradigms, Noun, NounGroup, NounParadigms};
pub use paradigm::{inflect, registry, Entry, Paradigm, ParadigmKind, Registry};
pub use verb::{
    gen_verb, mk_gen_verb, mk_verb_caus12, verb_categories, verb_v2, verb_endings, Verb, VerbCategory, VerbEndings,
    VerbLevel,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("{form:?} is not a valid roman form: {source}")]
    Unscannable { form: String, source: TranslitError },
    #[error("dictionary form must be non-empty")]
    EmptyForm,
    #[error("unknown paradigm {0:?}")]
    UnknownParadigm(String),
    #[error("paradigm {paradigm} takes {expected} form(s), got {found}")]
    Arity {
        paradigm: String,
        expected: usize,
        found: usize,
    },
    #[error("{lemma:?} does not belong to paradigm {paradigm}: {condition}")]
    Membership {
        paradigm: String,
        lemma: String,
        condition: String,
    },
    #[error("{0:?} is not an infinitive (must end in \"na\")")]
    NotInfinitive(String),
}

pub type Result<T> = std::result::Result<T, MorphError>;

/// Tokenizes a roman word under the shipped table.
pub fn tokens(s: &str) -> Result<Vec<&'static str>> {
    translit::shipped().word_tokens(s).map_err(|source| MorphError::Unscannable {
        form: s.to_string(),
        source,
    })
}

/// `s` without its last `n` roman tokens.
pub fn suffix_drop(n: usize, s: &str) -> Result<String> {
    let toks = tokens(s)?;
    let keep = toks.len().saturating_sub(n);
    Ok(toks[..keep].concat())
}

/// The last `n` roman tokens of `s`.
pub fn suffix_take(n: usize, s: &str) -> Result<String> {
    let toks = tokens(s)?;
    let start = toks.len().saturating_sub(n);
    Ok(toks[start..].concat())
}

/// A dictionary form: a non-empty roman string that scans.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DictForm(String);

impl DictForm {
    pub fn new(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        if s.is_empty() {
            return Err(MorphError::EmptyForm);
        }
        tokens(&s)?;
        Ok(DictForm(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_urdu(&self) -> String {
        translit::shipped().to_urdu(&self.0).expect("dictionary forms scan")
    }
}

impl TryFrom<String> for DictForm {
    type Error = MorphError;

    fn try_from(s: String) -> Result<Self> {
        DictForm::new(s)
    }
}

impl From<DictForm> for String {
    fn from(d: DictForm) -> String {
        d.0
    }
}

impl fmt::Display for DictForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for DictForm {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// One cell of an inflection table. `Absent` marks a form the lexeme does
/// not have (missing causative levels); it is never indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cell {
    Form(String),
    Absent,
}

impl Cell {
    pub fn form(&self) -> Option<&str> {
        match self {
            Cell::Form(s) => Some(s),
            Cell::Absent => None,
        }
    }

    pub fn is_present(&self) -> bool {
        matches!(self, Cell::Form(_))
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Cell {
        Cell::Form(s)
    }
}
