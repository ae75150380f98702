//! Loading the gf-lexicon export as typed syntax leaves.

use std::collections::BTreeMap;

use crate::lexicon::Dictionary;
use crate::morphology::WordClass;
use crate::translit;

use super::{Leaf, LeafCat, Result, SyntaxError};

/// Leaves grouped by category. Closed-class entries of the dictionary are
/// always present.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SyntaxLexicon {
    leaves: BTreeMap<LeafCat, Vec<Leaf>>,
}

impl SyntaxLexicon {
    pub fn leaves(&self, cat: LeafCat) -> &[Leaf] {
        self.leaves.get(&cat).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, cat: LeafCat) -> usize {
        self.leaves(cat).len()
    }

    pub fn len(&self) -> usize {
        self.leaves.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn categories(&self) -> impl Iterator<Item = (LeafCat, &[Leaf])> {
        self.leaves.iter().map(|(c, v)| (*c, v.as_slice()))
    }

    fn insert(&mut self, cat: LeafCat, leaf: Leaf) {
        let v = self.leaves.entry(cat).or_default();
        if let Err(pos) = v.binary_search(&leaf) {
            v.insert(pos, leaf);
        }
    }
}

struct Decl<'a> {
    name: &'a str,
    class: &'a str,
    cells: Vec<(&'a str, &'a str)>,
}

fn quoted(s: &str, line: usize) -> Result<(&str, &str)> {
    let err = |m: &str| SyntaxError::GfSyntax {
        line,
        message: m.to_string(),
    };
    let s = s.trim_start().strip_prefix('"').ok_or_else(|| err("expected '\"'"))?;
    let end = s.find('"').ok_or_else(|| err("unterminated string"))?;
    Ok((&s[..end], &s[end + 1..]))
}

fn parse_decl(text: &str, line: usize) -> Result<Decl<'_>> {
    let err = |m: &str| SyntaxError::GfSyntax {
        line,
        message: m.to_string(),
    };
    let (name, rest) = text.split_once(" : ").ok_or_else(|| err("expected 'NAME : CLASS'"))?;
    let (class, rest) = rest.split_once(" [").ok_or_else(|| err("expected '[INHERENT]'"))?;
    let (_, rest) = rest.split_once("] {").ok_or_else(|| err("expected '] {'"))?;
    let mut rest = rest;
    let mut cells = Vec::new();
    loop {
        let t = rest.trim_start();
        if let Some(after) = t.strip_prefix('}') {
            if after.trim() != ";" {
                return Err(err("expected '} ;' at end of declaration"));
            }
            break;
        }
        let (features, r) = quoted(t, line)?;
        let r = r.trim_start().strip_prefix('=').ok_or_else(|| err("expected '='"))?;
        let (form, r) = quoted(r, line)?;
        rest = r.trim_start().strip_prefix(';').ok_or_else(|| err("expected ';' after cell"))?;
        cells.push((features, form));
    }
    Ok(Decl {
        name: name.trim(),
        class: class.trim(),
        cells,
    })
}

/// Reads a gf-lexicon export against the dictionary it came from. Every
/// declaration must name an entry of `dict` by lemma and id, with the same
/// word class and the same Urdu forms.
pub fn load_gf_lexicon(exported: &[u8], dict: &Dictionary) -> Result<SyntaxLexicon> {
    let text = std::str::from_utf8(exported).map_err(|e| SyntaxError::GfSyntax {
        line: 0,
        message: e.to_string(),
    })?;
    let table = translit::shipped();
    let mut lex = SyntaxLexicon::default();
    for e in &dict.entries()[..dict.closed_count()] {
        lex.insert(LeafCat::of(e), Leaf::new(e.lemma.as_str(), e.lemma_id));
    }
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with("--") {
            continue;
        }
        let decl = parse_decl(raw, line)?;
        let unknown = || SyntaxError::UnknownLemma {
            line,
            name: decl.name.to_string(),
        };
        let leaf: Leaf = decl.name.parse().map_err(|_| unknown())?;
        let entry = dict
            .entry(leaf.id)
            .filter(|e| e.lemma.as_str() == leaf.lemma)
            .ok_or_else(unknown)?;
        let mismatch = |declared: String, found: String| SyntaxError::CategoryMismatch {
            line,
            name: decl.name.to_string(),
            declared,
            found,
        };
        let class: WordClass = decl
            .class
            .parse()
            .map_err(|_| mismatch(decl.class.to_string(), entry.word_class.to_string()))?;
        if class != entry.word_class {
            return Err(mismatch(class.to_string(), entry.word_class.to_string()));
        }
        for (features, form) in &decl.cells {
            let bundle = class.parse_form(features).ok_or_else(|| SyntaxError::GfSyntax {
                line,
                message: format!("{class} has no cell {features:?}"),
            })?;
            let expected = entry.form(bundle).map(|s| table.to_urdu(s).expect("dictionary forms scan"));
            if expected.as_deref() != Some(*form) {
                return Err(SyntaxError::GfSyntax {
                    line,
                    message: format!("cell {features:?} of {} differs from the dictionary", decl.name),
                });
            }
        }
        lex.insert(LeafCat::of(entry), leaf);
    }
    Ok(lex)
}
