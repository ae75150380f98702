//! Dictionary compilation, analysis and synthesis.
//!
//! A [`Dictionary`] holds the closed-class entries followed by the entries
//! of a lexicon source, with lemma ids equal to their position. Every
//! present cell is indexed by its roman surface form.

mod closed;
mod export;
mod source;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::morphology::{inflect, DictForm, Entry, FeatureBundle, InherentTag, WordClass};
use crate::translit::{self, Script, TranslitError};

pub use closed::{parse_closed_classes, shipped_closed_classes};
pub use export::{export, import_json, ExportFormat};
pub use source::{parse_lexicon, LexiconSource, SourceLine};

/// The sample lexicon shipped with the crate.
pub const SAMPLE_LEXICON: &str = include_str!("../../data/sample_lexicon.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}{message}", if *.line > 0 { format!("line {}: ", .line) } else { String::new() })]
pub struct LexiconError {
    /// 1-based source line, or 0 when the error is not tied to a line.
    pub line: usize,
    pub message: String,
}

impl LexiconError {
    pub fn at(line: usize, message: impl Into<String>) -> Self {
        LexiconError {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, LexiconError>;

/// A compiled full-form dictionary.
#[derive(Debug, Clone)]
pub struct Dictionary {
    entries: Vec<Entry>,
    closed: usize,
    index: HashMap<String, Vec<(u32, u16)>>,
    by_lemma: HashMap<String, Vec<u32>>,
}

impl PartialEq for Dictionary {
    fn eq(&self, other: &Self) -> bool {
        self.closed == other.closed && self.entries == other.entries
    }
}

impl Eq for Dictionary {}

/// Compiles a lexicon source on top of the shipped closed classes.
pub fn compile(source: &LexiconSource) -> Result<Dictionary> {
    let mut entries: Vec<Entry> = shipped_closed_classes().to_vec();
    let closed = entries.len();
    entries.reserve(source.lines.len());
    for line in &source.lines {
        let entry = inflect(&line.paradigm, &line.form_strs()).map_err(|e| LexiconError::at(line.line, e.to_string()))?;
        entries.push(entry);
    }
    Dictionary::from_entries(entries, closed)
}

/// Parses and compiles lexicon source text.
pub fn compile_str(source: &str) -> Result<Dictionary> {
    compile(&parse_lexicon(source.as_bytes())?)
}

impl Dictionary {
    /// Builds the index over `entries`, renumbering lemma ids by position.
    /// The first `closed` entries are the closed-class block.
    pub fn from_entries(mut entries: Vec<Entry>, closed: usize) -> Result<Self> {
        if closed > entries.len() {
            return Err(LexiconError::at(0, "closed-class count exceeds entry count"));
        }
        let mut index: HashMap<String, Vec<(u32, u16)>> = HashMap::new();
        let mut by_lemma: HashMap<String, Vec<u32>> = HashMap::new();
        for (id, entry) in entries.iter_mut().enumerate() {
            let id = u32::try_from(id).map_err(|_| LexiconError::at(0, "too many entries"))?;
            entry.lemma_id = id;
            if entry.table.len() != entry.word_class.forms().len() {
                return Err(LexiconError::at(
                    0,
                    format!("entry {} has {} cells, expected {}", entry.lemma, entry.table.len(), entry.word_class.forms().len()),
                ));
            }
            for (cell, c) in entry.table.iter().enumerate() {
                if let Some(s) = c.form() {
                    index.entry(s.to_string()).or_default().push((id, cell as u16));
                }
            }
            by_lemma.entry(entry.lemma.as_str().to_string()).or_default().push(id);
        }
        Ok(Dictionary {
            entries,
            closed,
            index,
            by_lemma,
        })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Number of leading closed-class entries.
    pub fn closed_count(&self) -> usize {
        self.closed
    }

    pub fn entry(&self, lemma_id: u32) -> Option<&Entry> {
        self.entries.get(lemma_id as usize)
    }

    /// Entries whose dictionary form is `lemma` (roman).
    pub fn entries_for_lemma(&self, lemma: &str) -> impl Iterator<Item = &Entry> {
        self.by_lemma
            .get(lemma)
            .into_iter()
            .flatten()
            .map(|&id| &self.entries[id as usize])
    }

    /// Raw index hits for a roman surface form, in (lemma id, cell) order.
    pub fn lookup(&self, surface: &str) -> impl Iterator<Item = (&Entry, FeatureBundle)> {
        self.index.get(surface).into_iter().flatten().map(|&(id, cell)| {
            let e = &self.entries[id as usize];
            (e, e.word_class.forms()[cell as usize])
        })
    }

    /// Total number of indexed (entry, cell) pairs.
    pub fn form_count(&self) -> usize {
        self.index.values().map(Vec::len).sum()
    }

    /// Number of distinct surface strings.
    pub fn surface_count(&self) -> usize {
        self.index.len()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.index.keys().map(String::as_str)
    }
}

/// One reading of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub lemma: DictForm,
    pub lemma_id: u32,
    pub urdu_lemma: String,
    pub word_class: WordClass,
    pub features: FeatureBundle,
    pub inherent: Vec<InherentTag>,
}

impl Analysis {
    fn new(entry: &Entry, features: FeatureBundle) -> Self {
        Analysis {
            lemma: entry.lemma.clone(),
            lemma_id: entry.lemma_id,
            urdu_lemma: entry.lemma.to_urdu(),
            word_class: entry.word_class,
            features,
            inherent: entry.inherent.clone(),
        }
    }

    pub fn inherent_string(&self) -> String {
        join_tags(&self.inherent)
    }
}

pub(crate) fn join_tags(tags: &[InherentTag]) -> String {
    tags.iter().map(|t| t.as_str()).collect::<Vec<_>>().join(" ")
}

/// `<lemma>_<id>. <urdu> +<CLASS> - <FEATURES> - <INHERENT> -`. An empty
/// field is left out together with the dash before it, so a postposition
/// renders as `kw_18. کو +PostP -`.
impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}. {} +{}", self.lemma, self.lemma_id, self.urdu_lemma, self.word_class)?;
        for field in [self.features.to_string(), self.inherent_string()] {
            if !field.is_empty() {
                write!(f, " - {field}")?;
            }
        }
        f.write_str(" -")
    }
}

/// Converts `word` to roman if it is in Urdu script.
pub fn to_roman_word(word: &str, script: Script) -> std::result::Result<String, TranslitError> {
    match script {
        Script::Urdu => translit::shipped().to_roman(word),
        Script::Roman => Ok(word.to_string()),
    }
}

/// All readings of an exact surface form; unknown words give none.
pub fn analyze(word: &str, script: Script, dict: &Dictionary) -> std::result::Result<Vec<Analysis>, TranslitError> {
    let roman = to_roman_word(word, script)?;
    Ok(dict.lookup(&roman).map(|(e, f)| Analysis::new(e, f)).collect())
}

/// One rendered cell of a synthesized table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthRow {
    pub features: FeatureBundle,
    pub roman: String,
    pub urdu: String,
}

#[derive(Debug, Clone)]
pub struct Synthesis<'a> {
    pub entry: &'a Entry,
    pub rows: Vec<SynthRow>,
}

/// Every entry with dictionary form `lemma` (roman or Urdu), with all of its
/// present cells in both scripts.
pub fn synthesize<'a>(lemma: &str, dict: &'a Dictionary) -> Vec<Synthesis<'a>> {
    let Ok(roman) = to_roman_word(lemma, Script::detect(lemma)) else {
        return Vec::new();
    };
    let table = translit::shipped();
    dict.entries_for_lemma(&roman)
        .map(|entry| Synthesis {
            entry,
            rows: entry
                .present()
                .map(|(features, s)| SynthRow {
                    features,
                    roman: s.to_string(),
                    urdu: table.to_urdu(s).expect("generated forms scan"),
                })
                .collect(),
        })
        .collect()
}
