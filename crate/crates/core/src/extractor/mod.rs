//! Corpus ingestion and paradigm-driven lexicon extraction.

mod extract;
mod rules;

use std::collections::BTreeMap;

use crate::translit::{self, is_arabic_punctuation, Script, Segment, SymbolKind, TranslitError};

pub use extract::{candidate_frequency, emit_candidates, extract, Candidate};
pub use rules::{parse_rules, Constraint, ParadigmRule, RuleError};

/// The shipped rule file.
pub const SHIPPED_RULES: &str = include_str!("../../data/paradigms.rules");

/// A tokenized corpus with per-word frequencies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub tokens: Vec<String>,
    pub freq: BTreeMap<String, usize>,
}

impl Corpus {
    pub fn from_tokens(tokens: Vec<String>) -> Self {
        let mut freq = BTreeMap::new();
        for t in &tokens {
            *freq.entry(t.clone()).or_insert(0) += 1;
        }
        Corpus { tokens, freq }
    }

    /// Distinct words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.freq.keys().map(String::as_str)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.freq.contains_key(word)
    }

    pub fn frequency(&self, word: &str) -> usize {
        self.freq.get(word).copied().unwrap_or(0)
    }
}

/// Splits text into words: whitespace and punctuation separate words,
/// diacritics stay inside them. Urdu input is split first and then
/// transliterated word by word.
pub fn tokenize(text: &str, script: Script) -> Result<Corpus, TranslitError> {
    let table = translit::shipped();
    let mut tokens = Vec::new();
    match script {
        Script::Roman => {
            let mut word = String::new();
            for seg in table.scan_roman(text)? {
                match seg {
                    Segment::Token(i) if table.entry(i).kind != SymbolKind::Punctuation => {
                        word.push_str(&table.entry(i).roman);
                    }
                    Segment::Pass(c) if c.is_ascii_digit() => word.push(c),
                    _ => {
                        if !word.is_empty() {
                            tokens.push(std::mem::take(&mut word));
                        }
                    }
                }
            }
            if !word.is_empty() {
                tokens.push(word);
            }
        }
        Script::Urdu => {
            let separator = |c: char| c.is_whitespace() || c.is_ascii_punctuation() || is_arabic_punctuation(c);
            for piece in text.split(separator).filter(|p| !p.is_empty()) {
                tokens.push(table.to_roman(piece)?);
            }
        }
    }
    Ok(Corpus::from_tokens(tokens))
}

/// Word and diacritic counts of a corpus.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CorpusStats {
    pub total_tokens: usize,
    pub unique_words: usize,
    /// Tokens containing at least one diacritic.
    pub diacritic_tokens: usize,
    /// Distinct words containing at least one diacritic.
    pub diacritic_unique: usize,
}

pub fn stats(corpus: &Corpus) -> CorpusStats {
    let table = translit::shipped();
    let mut s = CorpusStats {
        total_tokens: corpus.tokens.len(),
        unique_words: corpus.freq.len(),
        ..Default::default()
    };
    for (word, n) in &corpus.freq {
        if table.has_diacritic(word) {
            s.diacritic_unique += 1;
            s.diacritic_tokens += n;
        }
    }
    s
}

/// Splits a roman word into units: table tokens and single ASCII digits.
pub(crate) fn word_units(word: &str) -> Option<Vec<&'static str>> {
    const DIGITS: [&str; 10] = ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"];
    let table = translit::shipped();
    table
        .scan_roman(word)
        .ok()?
        .into_iter()
        .map(|seg| match seg {
            Segment::Token(i) => Some(table.entry(i).roman.as_str()),
            Segment::Pass(c) if c.is_ascii_digit() => Some(DIGITS[c as usize - '0' as usize]),
            Segment::Pass(_) => None,
        })
        .collect()
}
