//! A small agreement-aware grammar over dictionary entries: trees,
//! linearization to Urdu and chart parsing back to trees.

mod gf;
mod linearize;
mod parse;
mod tree;

use std::fmt;

use thiserror::Error;

use crate::morphology::{Entry, Gender, InherentTag, Number, Person, WordClass};

pub use gf::{load_gf_lexicon, SyntaxLexicon};
pub use linearize::{linearize, linearize_tokens, linearize_traced, AgreementUse};
pub use parse::{parse, parse_str, ParseResult};
pub use tree::{Cat, Leaf, Tree};

/// Person, number and gender of a noun phrase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Agreement {
    pub person: Person,
    pub number: Number,
    pub gender: Gender,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.person, self.number, self.gender)
    }
}

/// Lexical categories a leaf can fill.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LeafCat {
    N,
    /// Proper noun.
    PN,
    V,
    A,
    Adv,
    Pron,
    Dem,
    PostP,
    Conj,
    Particle,
    Num,
    VAux,
}

impl LeafCat {
    pub fn of(entry: &Entry) -> LeafCat {
        match entry.word_class {
            WordClass::N if entry.has_tag(InherentTag::Proper) => LeafCat::PN,
            WordClass::N => LeafCat::N,
            WordClass::Verb => LeafCat::V,
            WordClass::Adj => LeafCat::A,
            WordClass::Adv => LeafCat::Adv,
            WordClass::PersPron => LeafCat::Pron,
            WordClass::DemPron => LeafCat::Dem,
            WordClass::PostP => LeafCat::PostP,
            WordClass::Particle if entry.has_tag(InherentTag::Conj) => LeafCat::Conj,
            WordClass::Particle => LeafCat::Particle,
            WordClass::Num => LeafCat::Num,
            WordClass::VerbAux => LeafCat::VAux,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LeafCat::N => "N",
            LeafCat::PN => "PN",
            LeafCat::V => "V",
            LeafCat::A => "A",
            LeafCat::Adv => "Adv",
            LeafCat::Pron => "Pron",
            LeafCat::Dem => "Dem",
            LeafCat::PostP => "PostP",
            LeafCat::Conj => "Conj",
            LeafCat::Particle => "Particle",
            LeafCat::Num => "Num",
            LeafCat::VAux => "VAux",
        }
    }
}

impl fmt::Display for LeafCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("no dictionary entry with id {}", .0.id)]
    UnknownLeaf(Leaf),
    #[error("leaf {leaf} names entry {id} whose lemma is {found}")]
    LeafMismatch { leaf: Leaf, id: u32, found: String },
    #[error("leaf {leaf} is a {found}, expected {expected}")]
    Category {
        leaf: Leaf,
        expected: LeafCat,
        found: LeafCat,
    },
    #[error("leaf {leaf} has no form for {cell}")]
    MissingCell { leaf: Leaf, cell: String },
    #[error("numeral {num} is {expected} but the noun is {found}")]
    NumberMismatch {
        num: Leaf,
        expected: Number,
        found: Number,
    },
    #[error("a {0} has no standalone linearization")]
    NoStandalone(Cat),
    #[error("tree text at char {offset}: {message}")]
    TreeText { offset: usize, message: String },
    #[error("gf lexicon line {line}: {message}")]
    GfSyntax { line: usize, message: String },
    #[error("gf lexicon line {line}: unknown lemma {name}")]
    UnknownLemma { line: usize, name: String },
    #[error("gf lexicon line {line}: {name} is declared {declared} but the dictionary has {found}")]
    CategoryMismatch {
        line: usize,
        name: String,
        declared: String,
        found: String,
    },
}

pub type Result<T> = std::result::Result<T, SyntaxError>;
